#include "zfree/structure.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "zfree/engine.hpp"
#include "zfree/set_spec.hpp"

namespace zfree {

Int max_zero_free_card_formula(PrimeModulus p) {
  // k(k+1)/2 <= p+1  <=>  (2k+1)^2 <= 8(p+1)+1
  const Int root = isqrt(8 * (p.value() + 1) + 1);
  return (root - 1) / 2;
}

int delta(PrimeModulus p) {
  const Int d = isqrt(2 * p.value()) - max_zero_free_card_formula(p);
  if (d != 0 && d != 1) throw std::logic_error("delta(p) outside {0, 1} for p = " + std::to_string(p.value()));
  return static_cast<int>(d);
}

Int triangular_s(PrimeModulus p) {
  const Int x = isqrt(2 * p.value());
  return x * (x + 1) / 2;
}

bool is_special_prime(PrimeModulus p) {
  const Int gap = triangular_s(p) - p.value();
  return gap >= 2 && gap <= 7;
}

ResidueSet construct_extremal(PrimeModulus p) {
  if (p.value() < 7) throw std::invalid_argument("construct_extremal needs p >= 7");
  const Int k = max_zero_free_card_formula(p);
  std::vector<Int> values{-2, 1};
  for (Int v = 3; v <= k; ++v) values.push_back(v);
  return ResidueSet::from_signed(p, values);
}

ResidueSet construct_interval_set(PrimeModulus p) {
  if (p.value() < 5) throw std::invalid_argument("construct_interval_set needs p >= 5");
  const Int top = isqrt(2 * p.value()) - 1;
  std::vector<Int> values;
  for (Int v = 1; v <= top; ++v) values.push_back(v);
  return ResidueSet(p, std::move(values));
}

namespace {

Decomposition split_by_sign(const ResidueSet& a, Int d) {
  const PrimeModulus p = a.modulus();
  std::vector<Int> neg, pos;
  Int s2 = 0, nw = 0;
  for (Int r : a) {
    const Int v = canonical_rep(r, p).value();
    if (v < 0) {
      neg.push_back(r);
      nw -= v;
    } else {
      pos.push_back(r);
      s2 += v;
    }
  }
  return {d, ResidueSet(p, std::move(neg)), ResidueSet(p, std::move(pos)), s2, nw};
}

}  // namespace

Decomposition decompose(const ResidueSet& a) { return split_by_sign(a, 1); }

Decomposition decompose_normalized(const ResidueSet& a) {
  const Int d = find_normalizing_dilate(a).d;
  return split_by_sign(dilate_set(a, d), d);
}

GapSequence gap_sequence(const ResidueSet& a, Int bound) {
  const PrimeModulus p = a.modulus();
  if (bound > p.half()) throw std::invalid_argument("gap bound exceeds (p-1)/2");
  GapSequence out{bound, {}};
  for (Int g = 1; g <= bound; ++g) {
    if (!a.contains(g) && !a.contains(p.value() - g)) out.gaps.push_back(g);
  }
  return out;
}

std::optional<Int> least_gap(const ResidueSet& a) {
  const PrimeModulus p = a.modulus();
  for (Int g = 1; g <= p.half(); ++g) {
    if (!a.contains(g) && !a.contains(p.value() - g)) return g;
  }
  return std::nullopt;
}

namespace {

constexpr G0Constraint kAtLeast5{5, true};
constexpr G0Constraint kEq(Int v) { return {v, false}; }

// Rows 1-3 leave the delta column blank: no constraint.
const std::vector<StructureRow> kTable = {
    {1, {1, 2, 3, 4}, std::nullopt, kAtLeast5, {{}, 1, {}, {}}},
    {2, {-1, 2, 3, 4}, std::nullopt, kAtLeast5, {{-1}, 1, {}, {}}},
    {3, {-2, 1, 3, 4}, std::nullopt, kAtLeast5, {{-2, -1}, 1, {}, {}}},
    {4, {1, 2, 3}, 1, kEq(4), {{}, 1, {}, {}}},
    {5, {-1, 2, 3}, 1, kEq(4), {{-1}, 1, {}, {}}},
    {6, {-2, 1, 3}, 1, kEq(4), {{-2, -1}, 1, {}, {}}},
    {7, {-3, -1, 2}, 1, kEq(4), {{-4, -3, -2, -1}, 1, {}, {}}},
    {8, {1, 2, 4}, 1, kEq(3), {{}, 1, {}, {}}},
    {9, {-1, 2, 4}, 1, kEq(3), {{-1}, 1, {}, {}}},
    {10, {-2, 1, 4}, 1, kEq(3), {{-2, -1}, 1, {}, {}}},
    {11, {-4, 1, 2}, 1, kEq(3), {{-4, -3, -2, -1}, 1, {}, {}}},
    // Printed with a subscript p in the source table; taken as integers.
    {12, {-2, -1, 4}, 1, kEq(3), {{-3, -2, -1}, 1, {}, {}}},
    {13, {1, 3, 4}, 1, kEq(2), {{}, 1, {2}, {2}}},
    {14, {-1, 3, 4}, 1, kEq(2), {{-1}, 1, {1}, {2}}},
    {15, {-3, 1, 4}, 1, kEq(2), {{-3, -2}, 1, {}, {2}}},
    {16, {2, 3, 4}, 1, kEq(1), {{}, 2, {}, {1}}},
    // Printed as {-2,-1} u ...; -1 = -2 + 1 is unreachable once g0 = 1.
    {17, {-2, 3, 4}, 1, kEq(1), {{-2}, 1, {}, {1}}},
    {18, {-3, 2, 4}, 1, kEq(1), {{-3, -1}, 1, {}, {1}}},
    {19, {-4, 2, 3}, 1, kEq(1), {{-4, -2, -1}, 1, {}, {1}}},
};

std::vector<Int> small_part_of(const ResidueSet& a) {
  std::vector<Int> out;
  for (Int v : a.signed_values()) {
    if (v >= -4 && v <= 4) out.push_back(v);
  }
  return out;
}

OrientationProbe probe(const ResidueSet& a, Orientation o, int d) {
  OrientationProbe pr{o, small_part_of(a), d, least_gap(a), 0, false, false};
  for (const StructureRow& row : kTable) {
    if (row.small_part == pr.small_part) {
      pr.small_part_row = row.row_id;
      pr.delta_ok = !row.delta_constraint || *row.delta_constraint == d;
      pr.g0_ok = row.g0_constraint.accepts(pr.g0);
      break;
    }
  }
  return pr;
}

}  // namespace

std::span<const StructureRow> structure_table() { return kTable; }

const StructureRow& structure_row(int row_id) {
  if (row_id < 1 || row_id > static_cast<int>(kTable.size())) {
    throw std::out_of_range("no structure row " + std::to_string(row_id));
  }
  return kTable[static_cast<std::size_t>(row_id - 1)];
}

std::vector<Int> predicted_sharp(const StructureRow& row, Int s_double_prime) {
  const SharpShape& shape = row.sharp_shape;
  std::vector<Int> excluded = shape.excluded_constants;
  for (Int k : shape.excluded_offsets) excluded.push_back(s_double_prime - k);

  std::vector<Int> out = shape.extras;
  for (Int v = shape.interval_start; v <= s_double_prime; ++v) {
    if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(Orientation o) { return o == Orientation::as_given ? "as-given" : "negated"; }

Classification classify_structure(const ResidueSet& a) {
  const PrimeModulus p = a.modulus();
  const Int k = max_zero_free_card_formula(p);
  if (static_cast<Int>(a.size()) != k) {
    throw std::invalid_argument("classification needs a largest set: |A| = " + std::to_string(a.size()) +
                                " but the maximal cardinality is " + std::to_string(k));
  }
  const int d = delta(p);
  const ResidueSet neg = negate_set(a);

  Classification c;
  c.probes = {probe(a, Orientation::as_given, d), probe(neg, Orientation::negated, d)};
  for (const OrientationProbe& pr : c.probes) {
    if (pr.matched()) {
      c.row_id = pr.small_part_row;
      c.orientation = pr.orientation;
      c.s_double_prime = decompose(pr.orientation == Orientation::as_given ? a : neg).s_double_prime;
      break;
    }
  }
  return c;
}

ClassificationReport classification_report(const ResidueSet& a) {
  ClassificationReport r;
  r.classification = classify_structure(a);
  const Classification& c = r.classification;
  if (!c.row_id) return r;

  const ResidueSet oriented = c.orientation == Orientation::as_given ? a : negate_set(a);
  r.computed = subset_sums_integer(oriented).values();
  r.predicted = predicted_sharp(structure_row(*c.row_id), c.s_double_prime);
  std::set_difference(r.predicted.begin(), r.predicted.end(), r.computed.begin(), r.computed.end(),
                      std::back_inserter(r.missing));
  std::set_difference(r.computed.begin(), r.computed.end(), r.predicted.begin(), r.predicted.end(),
                      std::back_inserter(r.extra));
  return r;
}

std::string ClassificationReport::to_string() const {
  const Classification& c = classification;
  std::string out;
  if (c.row_id) {
    out = "row=" + std::to_string(*c.row_id) + " orientation=" + zfree::to_string(c.orientation) +
          " s2=" + std::to_string(c.s_double_prime) + " predicted={" + format_integer_list(predicted) +
          "} computed={" + format_integer_list(computed) + "} missing={" + format_integer_list(missing) +
          "} extra={" + format_integer_list(extra) + "} match=" + (sharp_matches() ? "true" : "false");
    return out;
  }
  out = "row=none";
  for (const OrientationProbe& pr : c.probes) {
    const std::string tag = pr.orientation == Orientation::as_given ? "given" : "negated";
    out += " " + tag + ".small={" + format_integer_list(pr.small_part) + "}";
    out += " " + tag + ".g0=" + (pr.g0 ? std::to_string(*pr.g0) : std::string("none"));
    out += " " + tag + ".small_ok=" + (pr.small_part_row != 0 ? "true" : "false");
    if (pr.small_part_row != 0) {
      out += " " + tag + ".row=" + std::to_string(pr.small_part_row);
      out += " " + tag + ".delta_ok=" + (pr.delta_ok ? "true" : "false");
      out += " " + tag + ".g0_ok=" + (pr.g0_ok ? "true" : "false");
    }
  }
  out += " delta=" + std::to_string(c.probes[0].delta);
  return out;
}

}  // namespace zfree
