#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "support/oracles.hpp"
#include "zfree/engine.hpp"
#include "zfree/oracle.hpp"
#include "zfree/set_spec.hpp"
#include "zfree/structure.hpp"
#include "zfree/sweep.hpp"

using namespace zfree;

namespace {

const PrimeModulus P113{113};

std::vector<Int> range(Int a, Int b) {
  std::vector<Int> out;
  for (Int x = a; x <= b; ++x) out.push_back(x);
  return out;
}

ResidueSet worked_set() {
  std::vector<Int> v{-3, 1};
  for (Int x = 4; x <= 15; ++x) v.push_back(x);
  return ResidueSet::from_signed(P113, v);
}

// Cells of the published table, typed in independently of the library data.
// Sharp column: extras, interval start, excluded constants, excluded offsets
// (offset k stands for s'' - k). Delta 0 means the cell is blank.
struct PrintedRow {
  int id;
  std::vector<Int> small;
  int delta;
  const char* g0;
  std::vector<Int> extras;
  Int start;
  std::vector<Int> excl;
  std::vector<Int> offsets;
};

const std::vector<PrintedRow> kPrinted = {
    {1, {1, 2, 3, 4}, 0, ">=5", {}, 1, {}, {}},
    {2, {-1, 2, 3, 4}, 0, ">=5", {-1}, 1, {}, {}},
    {3, {1, -2, 3, 4}, 0, ">=5", {-2, -1}, 1, {}, {}},
    {4, {1, 2, 3}, 1, "4", {}, 1, {}, {}},
    {5, {-1, 2, 3}, 1, "4", {-1}, 1, {}, {}},
    {6, {1, -2, 3}, 1, "4", {-1, -2}, 1, {}, {}},
    {7, {-1, 2, -3}, 1, "4", {-4, -3, -2, -1}, 1, {}, {}},
    {8, {1, 2, 4}, 1, "3", {}, 1, {}, {}},
    {9, {-1, 2, 4}, 1, "3", {-1}, 1, {}, {}},
    {10, {1, -2, 4}, 1, "3", {-2, -1}, 1, {}, {}},
    {11, {1, 2, -4}, 1, "3", {-4, -3, -2, -1}, 1, {}, {}},
    {12, {-1, -2, 4}, 1, "3", {-3, -2, -1}, 1, {}, {}},  // printed as [-3,-1]_p
    {13, {1, 3, 4}, 1, "2", {}, 1, {2}, {2}},
    {14, {-1, 3, 4}, 1, "2", {-1}, 1, {1}, {2}},
    {15, {1, -3, 4}, 1, "2", {-3, -2}, 1, {}, {2}},
    {16, {2, 3, 4}, 1, "1", {}, 2, {}, {1}},
    {17, {-2, 3, 4}, 1, "1", {-2, -1}, 1, {}, {1}},
    {18, {2, -3, 4}, 1, "1", {-3, -1}, 1, {}, {1}},
    {19, {2, 3, -4}, 1, "1", {-4, -2, -1}, 1, {}, {1}},
};

std::vector<Int> sorted(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string g0_text(const G0Constraint& c) {
  return (c.at_least ? ">=" : "") + std::to_string(c.value);
}

// A largest zero-free set realizing a row: small part u ([5, m] minus at most
// one element), |A| = k. Returns nullopt when none exists at p.
std::optional<ResidueSet> realize_row(const StructureRow& row, PrimeModulus p) {
  const Int k = max_zero_free_card_formula(p);
  const auto need = k - static_cast<Int>(row.small_part.size());
  if (need < 0) return std::nullopt;
  for (Int m = 4 + need; m <= 4 + need + 1; ++m) {
    for (Int skip = (m == 4 + need ? 0 : 5); skip <= (m == 4 + need ? 0 : m); ++skip) {
      std::vector<Int> v = row.small_part;
      for (Int x = 5; x <= m; ++x) {
        if (x != skip) v.push_back(x);
      }
      const ResidueSet a = ResidueSet::from_signed(p, v);
      if (static_cast<Int>(a.size()) != k || !is_zero_free(a)) continue;
      const Classification c = classify_structure(a);
      if (c.row_id == row.row_id && c.orientation == Orientation::as_given) return a;
    }
  }
  return std::nullopt;
}

void expect_largest_bounds(const ResidueSet& a) {
  const PrimeModulus p = a.modulus();
  const int d = delta(p);
  const Decomposition dec = decompose_normalized(a);
  EXPECT_LE(dec.neg_weight, 2 * (1 + d)) << format_integer_list(a.signed_values());
  EXPECT_LE(dec.s_double_prime, p.value() - 1 + 3 * d);
  if (dec.s_double_prime > p.value() - 1) {
    const Int s = triangular_s(p);
    EXPECT_GE(s, p.value() + 2);
    EXPECT_LE(s, p.value() + 7);
  }
}

}  // namespace

TEST(Formula, Examples) {
  EXPECT_EQ(max_zero_free_card_formula(P113), 14);
  EXPECT_EQ(max_zero_free_card_formula(PrimeModulus(7)), 3);
  EXPECT_EQ(max_zero_free_card_formula(PrimeModulus(5)), 3);
  EXPECT_EQ(delta(P113), 1);
  EXPECT_EQ(delta(PrimeModulus(97)), 0);
  EXPECT_EQ(delta(PrimeModulus(101)), 1);
  EXPECT_EQ(triangular_s(P113), 120);
  EXPECT_EQ(triangular_s(PrimeModulus(97)), 91);
  EXPECT_EQ(triangular_s(PrimeModulus(127)), 120);
  EXPECT_TRUE(is_special_prime(P113));
  EXPECT_FALSE(is_special_prime(PrimeModulus(97)));
  EXPECT_FALSE(is_special_prime(PrimeModulus(127)));
}

TEST(Formula, ConsistentForAllPrimesBelow1e5) {
  for (Int p : primes_in_range(3, 100000)) {
    const PrimeModulus m(p);
    const Int k = max_zero_free_card_formula(m);
    ASSERT_LE(k * (k + 1) / 2, p + 1);
    ASSERT_GT((k + 1) * (k + 2) / 2, p + 1);
    ASSERT_EQ(k, static_cast<Int>(std::floor(std::sqrt(2.0 * p + 2.25) - 0.5)));
    const int d = delta(m);
    ASSERT_TRUE(d == 0 || d == 1);
    ASSERT_EQ(d == 0, triangular_s(m) <= p + 1) << p;
    const Int gap = triangular_s(m) - p;
    ASSERT_EQ(is_special_prime(m), gap >= 2 && gap <= 7);
  }
}

TEST(Constructions, Examples) {
  const ResidueSet e = construct_extremal(P113);
  EXPECT_EQ(e.signed_values(), (std::vector<Int>{-2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}));
  EXPECT_TRUE(is_zero_free(e));

  const ResidueSet e7 = construct_extremal(PrimeModulus(7));
  EXPECT_EQ(e7, ResidueSet(PrimeModulus(7), {5, 1, 3}));
  EXPECT_TRUE(is_zero_free(e7));

  const ResidueSet big = construct_extremal(PrimeModulus(10007));
  EXPECT_EQ(big.size(), 140u);  // 141 * 142 / 2 = 10011 exceeds 10008
  EXPECT_TRUE(is_zero_free(big));

  EXPECT_THROW(construct_extremal(PrimeModulus(5)), std::invalid_argument);

  EXPECT_EQ(construct_interval_set(P113), ResidueSet(P113, range(1, 14)));
  EXPECT_EQ(weight_summary(construct_interval_set(P113)).total, 105);
  EXPECT_EQ(construct_interval_set(PrimeModulus(7)), ResidueSet(PrimeModulus(7), {1, 2}));
  const ResidueSet i1009 = construct_interval_set(PrimeModulus(1009));
  EXPECT_EQ(i1009, ResidueSet(PrimeModulus(1009), range(1, 43)));
  EXPECT_EQ(weight_summary(i1009).total, 946);
  EXPECT_TRUE(is_zero_free(i1009));
  EXPECT_THROW(construct_interval_set(PrimeModulus(3)), std::invalid_argument);
}

TEST(Constructions, ZeroFreeWithFormulaCardinality) {
  for (Int p : primes_in_range(7, 10000)) {
    const PrimeModulus m(p);
    const ResidueSet e = construct_extremal(m);
    ASSERT_EQ(static_cast<Int>(e.size()), max_zero_free_card_formula(m));
    ASSERT_TRUE(is_zero_free(e)) << p;
    ASSERT_TRUE(is_zero_free(construct_interval_set(m))) << p;
  }
}

TEST(Decompose, Examples) {
  const Decomposition a = decompose(worked_set());
  EXPECT_EQ(a.d, 1);
  EXPECT_EQ(a.neg_part.signed_values(), (std::vector<Int>{-3}));
  std::vector<Int> pos{1};
  for (Int x = 4; x <= 15; ++x) pos.push_back(x);
  EXPECT_EQ(a.pos_part.signed_values(), pos);
  EXPECT_EQ(a.s_double_prime, 115);
  EXPECT_EQ(a.neg_weight, 3);

  const Decomposition b = decompose(ResidueSet(P113, range(1, 14)));
  EXPECT_TRUE(b.neg_part.empty());
  EXPECT_EQ(b.s_double_prime, 105);

  const Decomposition c = decompose(construct_extremal(P113));
  EXPECT_EQ(c.neg_part.signed_values(), (std::vector<Int>{-2}));
  EXPECT_EQ(c.s_double_prime, 103);
}

TEST(Decompose, PartsPartitionTheDilate) {
  std::mt19937_64 rng(40);
  for (int t = 0; t < 300; ++t) {
    const Int p = std::vector<Int>{31, 61, 113, 257}[rng() % 4];
    const PrimeModulus m(p);
    const ResidueSet a(m, brute::random_residues(rng, p, 1 + rng() % 8));
    const Decomposition dec = decompose_normalized(a);
    const ResidueSet dilated = dilate_set(a, dec.d);
    ASSERT_EQ(dec.neg_part.size() + dec.pos_part.size(), a.size());
    ASSERT_FALSE(intersects(dec.neg_part, dec.pos_part));
    for (Int r : dec.neg_part) ASSERT_TRUE(dilated.contains(r));
    for (Int r : dec.pos_part) ASSERT_TRUE(dilated.contains(r));
    if (is_zero_free(dilated)) ASSERT_FALSE(intersects(dec.pos_part, negate_set(dec.neg_part)));
  }
}

TEST(GapSequence, Examples) {
  EXPECT_EQ(gap_sequence(worked_set(), 20).gaps, (std::vector<Int>{2, 16, 17, 18, 19, 20}));
  EXPECT_EQ(gap_sequence(ResidueSet(P113, range(1, 14)), 16).gaps, (std::vector<Int>{15, 16}));
  EXPECT_EQ(gap_sequence(construct_extremal(P113), 16).gaps, (std::vector<Int>{15, 16}));
  EXPECT_THROW(gap_sequence(worked_set(), 57), std::invalid_argument);
  EXPECT_EQ(least_gap(worked_set()), 2);
  EXPECT_EQ(least_gap(ResidueSet(PrimeModulus(5), {1, 2})), std::nullopt);
}

TEST(GapSequence, ListsExactlyTheUncoveredValues) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const PrimeModulus m(101);
    const ResidueSet a(m, brute::random_residues(rng, 101, rng() % 30));
    const GapSequence g = gap_sequence(a, 50);
    std::vector<Int> expected;
    const auto sv = a.signed_values();
    for (Int x = 1; x <= 50; ++x) {
      if (std::find(sv.begin(), sv.end(), x) == sv.end() && std::find(sv.begin(), sv.end(), -x) == sv.end()) {
        expected.push_back(x);
      }
    }
    ASSERT_EQ(g.gaps, expected);
    ASSERT_EQ(least_gap(a), expected.empty() ? std::nullopt : std::optional<Int>(expected.front()));
  }
}

TEST(StructureTable, MatchesPrintedTranscription) {
  const auto table = structure_table();
  ASSERT_EQ(table.size(), kPrinted.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const StructureRow& row = table[i];
    const PrintedRow& printed = kPrinted[i];
    SCOPED_TRACE("row " + std::to_string(printed.id));
    EXPECT_EQ(row.row_id, printed.id);
    EXPECT_EQ(&structure_row(printed.id), &row);
    EXPECT_EQ(row.small_part, sorted(printed.small));
    if (printed.delta == 0) {
      EXPECT_FALSE(row.delta_constraint.has_value());
    } else {
      EXPECT_EQ(row.delta_constraint, printed.delta);
    }
    EXPECT_EQ(g0_text(row.g0_constraint), printed.g0);
    EXPECT_EQ(row.sharp_shape.interval_start, printed.start);
    EXPECT_EQ(row.sharp_shape.excluded_constants, printed.excl);
    EXPECT_EQ(row.sharp_shape.excluded_offsets, printed.offsets);
    if (printed.id == 17) {
      // The printed -1 cannot be a subset sum when g0 = 1 rules out +-1 in A
      // and the only negative small element is -2. The data drops it.
      EXPECT_EQ(row.sharp_shape.extras, (std::vector<Int>{-2}));
    } else {
      EXPECT_EQ(sorted(row.sharp_shape.extras), sorted(printed.extras));
    }
  }
  EXPECT_THROW(structure_row(0), std::out_of_range);
  EXPECT_THROW(structure_row(20), std::out_of_range);
}

TEST(PredictedSharp, Examples) {
  EXPECT_EQ(predicted_sharp(structure_row(1), 105), range(1, 105));
  std::vector<Int> r15{-3, -2};
  for (Int x = 1; x <= 115; ++x) {
    if (x != 113) r15.push_back(x);
  }
  EXPECT_EQ(predicted_sharp(structure_row(15), 115), r15);
  std::vector<Int> r16 = range(2, 20);
  r16.erase(std::find(r16.begin(), r16.end(), 19));
  EXPECT_EQ(predicted_sharp(structure_row(16), 20), r16);
}

TEST(Classify, Examples) {
  const ClassificationReport a = classification_report(worked_set());
  EXPECT_EQ(a.classification.row_id, 15);
  EXPECT_EQ(a.classification.orientation, Orientation::as_given);
  EXPECT_EQ(a.classification.s_double_prime, 115);
  EXPECT_TRUE(a.sharp_matches());

  const ClassificationReport b = classification_report(construct_extremal(P113));
  EXPECT_EQ(b.classification.row_id, 3);
  EXPECT_TRUE(b.sharp_matches());

  const ClassificationReport c = classification_report(ResidueSet(P113, range(1, 14)));
  EXPECT_EQ(c.classification.row_id, 1);
  EXPECT_TRUE(c.sharp_matches());

  EXPECT_THROW(classify_structure(ResidueSet(P113, range(1, 13))), std::invalid_argument);
}

TEST(Classify, TriesNegationAndReportsNoMatch) {
  const ClassificationReport neg = classification_report(negate_set(worked_set()));
  EXPECT_EQ(neg.classification.row_id, 15);
  EXPECT_EQ(neg.classification.orientation, Orientation::negated);
  EXPECT_TRUE(neg.sharp_matches());

  // Small part {5..} only: no row has an empty small part.
  const ResidueSet far = ResidueSet(P113, range(5, 18));
  const ClassificationReport none = classification_report(far);
  EXPECT_FALSE(none.classification.row_id.has_value());
  EXPECT_FALSE(none.sharp_matches());
  EXPECT_EQ(none.to_string().rfind("row=none given.small={} given.g0=1 given.small_ok=false", 0), 0u)
      << none.to_string();
}

TEST(Classify, ReportLineIsStable) {
  const std::string line = classification_report(worked_set()).to_string();
  EXPECT_EQ(line,
            "row=15 orientation=as-given s2=115 predicted={-3,-2,1..112,114,115} "
            "computed={-3,-2,1..112,114,115} missing={} extra={} match=true");
}

TEST(Classify, EveryRowIsRealizedWithMatchingSharpSet) {
  std::map<int, Int> realized_at;
  for (const StructureRow& row : structure_table()) {
    for (Int p : primes_in_range(50, 3000)) {
      const auto a = realize_row(row, PrimeModulus(p));
      if (!a) continue;
      const ClassificationReport r = classification_report(*a);
      EXPECT_TRUE(r.sharp_matches()) << "row " << row.row_id << " p=" << p << ": " << r.to_string();
      realized_at[row.row_id] = p;
      break;
    }
  }
  EXPECT_EQ(realized_at.size(), 19u);
}

TEST(Classify, ConstructionsAndWitnessesAgreeWithPrediction) {
  for (Int p : primes_in_range(7, 3000)) {
    const PrimeModulus m(p);
    for (const ResidueSet& a : {construct_extremal(m), ResidueSet(m, range(1, max_zero_free_card_formula(m)))}) {
      if (!is_zero_free(a)) continue;
      const ResidueSet n = dilate_set(a, find_normalizing_dilate(a).d);
      const ClassificationReport r = classification_report(n);
      if (r.classification.row_id) EXPECT_TRUE(r.sharp_matches()) << p << " " << r.to_string();
    }
  }
  for (Int p : primes_in_range(7, 47)) {
    const OracleResult o = oracle_max_zero_free(PrimeModulus(p));
    ASSERT_EQ(o.status, OracleStatus::complete);
    const ResidueSet n = dilate_set(o.witness, find_normalizing_dilate(o.witness).d);
    const ClassificationReport r = classification_report(n);
    if (r.classification.row_id) EXPECT_TRUE(r.sharp_matches()) << p << " " << r.to_string();
  }
}

TEST(Classify, LargestSetBoundsAfterNormalization) {
  for (Int p : primes_in_range(7, 10000)) expect_largest_bounds(construct_extremal(PrimeModulus(p)));
  expect_largest_bounds(worked_set());
  for (Int p : primes_in_range(7, 47)) expect_largest_bounds(oracle_max_zero_free(PrimeModulus(p)).witness);
}
