#pragma once

// Closed-form extremal quantities, constructions of large zero-free sets,
// the sign decomposition, the gap sequence and the classifier for the 19
// structural shapes of a largest zero-free set.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zfree/core.hpp"

namespace zfree {

/// Largest k with k(k+1)/2 <= p+1, in exact integer arithmetic.
Int max_zero_free_card_formula(PrimeModulus p);
/// floor(sqrt(2p)) - max_zero_free_card_formula(p); always 0 or 1.
int delta(PrimeModulus p);
/// floor(sqrt(2p)) * (floor(sqrt(2p)) + 1) / 2.
Int triangular_s(PrimeModulus p);
/// triangular_s(p) lies in [p+2, p+7].
bool is_special_prime(PrimeModulus p);

/// {-2, 1} u [3, k] with k the formula value. Requires p >= 7.
ResidueSet construct_extremal(PrimeModulus p);
/// [1, floor(sqrt(2p)) - 1]. Requires p >= 5.
ResidueSet construct_interval_set(PrimeModulus p);

struct Decomposition {
  Int d;              // unit applied before splitting (1 for a plain split)
  ResidueSet neg_part;
  ResidueSet pos_part;
  Int s_double_prime;  // sum of the positive canonical reps
  Int neg_weight;      // sum of |a| over the negative canonical reps
};

/// Splits A by the sign of its canonical representatives.
Decomposition decompose(const ResidueSet& a);
/// Splits find_normalizing_dilate(A).d * A.
Decomposition decompose_normalized(const ResidueSet& a);

struct GapSequence {
  Int bound;
  std::vector<Int> gaps;
};

/// All g in [1, bound] with neither g nor -g a canonical rep of A.
/// Requires bound <= (p-1)/2.
GapSequence gap_sequence(const ResidueSet& a, Int bound);

/// Least gap, or nullopt when every g <= (p-1)/2 is covered.
std::optional<Int> least_gap(const ResidueSet& a);

struct G0Constraint {
  Int value;
  bool at_least;  // true: g0 >= value; false: g0 == value

  bool accepts(std::optional<Int> g0) const noexcept {
    if (!g0) return at_least;
    return at_least ? *g0 >= value : *g0 == value;
  }
  friend bool operator==(const G0Constraint&, const G0Constraint&) = default;
};

/// extras u ([interval_start, s''] \ (excluded_constants u {s'' - k : k in excluded_offsets}))
struct SharpShape {
  std::vector<Int> extras;
  Int interval_start;
  std::vector<Int> excluded_constants;
  std::vector<Int> excluded_offsets;
  friend bool operator==(const SharpShape&, const SharpShape&) = default;
};

struct StructureRow {
  int row_id;
  std::vector<Int> small_part;  // sorted canonical reps with |a| <= 4
  std::optional<int> delta_constraint;
  G0Constraint g0_constraint;
  SharpShape sharp_shape;
  friend bool operator==(const StructureRow&, const StructureRow&) = default;
};

/// The 19 rows, in order.
std::span<const StructureRow> structure_table();
const StructureRow& structure_row(int row_id);

std::vector<Int> predicted_sharp(const StructureRow& row, Int s_double_prime);

enum class Orientation { as_given, negated };
std::string to_string(Orientation o);

/// What the classifier saw in one orientation and which keys failed.
struct OrientationProbe {
  Orientation orientation;
  std::vector<Int> small_part;
  int delta;
  std::optional<Int> g0;
  int small_part_row;  // row whose small part matches, 0 if none
  bool delta_ok;
  bool g0_ok;
  bool matched() const noexcept { return small_part_row != 0 && delta_ok && g0_ok; }
};

struct Classification {
  std::optional<int> row_id;
  Orientation orientation = Orientation::as_given;
  Int s_double_prime = 0;  // of the matched orientation
  std::array<OrientationProbe, 2> probes;
};

/// Matches A (then -A) against the table. Throws std::invalid_argument when
/// |A| differs from the formula value, since the table only covers largest sets.
Classification classify_structure(const ResidueSet& a);

struct ClassificationReport {
  Classification classification;
  std::vector<Int> predicted;
  std::vector<Int> computed;
  std::vector<Int> missing;  // predicted but not computed
  std::vector<Int> extra;    // computed but not predicted

  bool sharp_matches() const noexcept { return classification.row_id && missing.empty() && extra.empty(); }
  /// Stable single-line key=value form.
  std::string to_string() const;
};

/// Classifies A and diffs the predicted sharp set of the matched row against
/// the integer subset sums of the matched orientation.
ClassificationReport classification_report(const ResidueSet& a);

}  // namespace zfree
