#pragma once

// Subset-sum reachability mod p and over Z, zero-freeness checks, the
// interval-extension and pair-sum covering lemmas, and dilate normalization.

#include <cstddef>
#include <span>
#include <vector>

#include "zfree/bitset.hpp"
#include "zfree/core.hpp"

namespace zfree {

/// A^# as a p-bit array: bit r is set iff some nonempty subset of A sums to
/// r mod p.
class SumBitsetModP {
 public:
  explicit SumBitsetModP(PrimeModulus p) : p_(p), bits_(static_cast<std::size_t>(p.value())) {}
  SumBitsetModP(PrimeModulus p, BitArray bits);

  PrimeModulus modulus() const noexcept { return p_; }
  const BitArray& bits() const noexcept { return bits_; }
  bool contains(Int residue) const noexcept { return bits_.test(static_cast<std::size_t>(p_.reduce(residue))); }
  std::size_t count() const noexcept { return bits_.count(); }
  std::vector<Int> residues() const;

  friend bool operator==(const SumBitsetModP&, const SumBitsetModP&) = default;

 private:
  PrimeModulus p_;
  BitArray bits_;
};

/// Word-packed rotate-OR, O(|A| * p / 64).
SumBitsetModP subset_sums_mod_p(const ResidueSet& a);
/// One-byte-per-residue serial DP. Kept as the reference for tests and the
/// benchmark; never used on a hot path.
SumBitsetModP subset_sums_mod_p_reference(const ResidueSet& a);

bool is_zero_free(const ResidueSet& a);
/// A^# u {0} != Z/pZ.
bool is_incomplete(const ResidueSet& a);

/// Nonempty-subset sums of a duplicate-free set of integers, stored as an
/// offset bit array over [lo, hi] with lo = -(sum of |negatives|) and
/// hi = sum of positives.
class SumSetInteger {
 public:
  SumSetInteger(Int lo, Int hi);

  Int lo() const noexcept { return lo_; }
  Int hi() const noexcept { return hi_; }
  bool contains(Int s) const noexcept { return s >= lo_ && s <= hi_ && bits_.test(static_cast<std::size_t>(s - lo_)); }
  std::size_t count() const noexcept { return bits_.count(); }
  std::vector<Int> values() const;
  /// sigma_p of the set, as a mod-p bitset.
  SumBitsetModP reduce_mod(PrimeModulus p) const;

  BitArray& bits() noexcept { return bits_; }
  const BitArray& bits() const noexcept { return bits_; }

 private:
  Int lo_;
  Int hi_;
  BitArray bits_;
};

/// Throws std::invalid_argument when values has duplicates.
SumSetInteger subset_sums_integer(std::span<const Int> values);
/// Integer sums of the canonical representatives of A.
SumSetInteger subset_sums_integer(const ResidueSet& a);

struct IntInterval {
  Int lo;
  Int hi;
  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

/// {m, ..., m+len-1} + (B* u {0}), which is the interval
/// [m - sum|b<0|, m + len - 1 + sum b>0] whenever every |b| <= len.
/// Throws std::invalid_argument if len < 1, B has duplicates, or some |b| > len.
IntInterval interval_extend(Int m, Int len, std::span<const Int> b);

/// Targets n in [q+1, floor(13q/8)] that are not a + b with a < b both in B.
/// B must be a subset of [1, q].
std::vector<Int> pair_sum_cover(std::span<const Int> b, Int q);

struct NormalizationResult {
  Int d;
  WeightSummary summary;
  std::size_t ties;  // units reaching the same minimal total
};

/// Exhaustive minimum of the weight total of d * A over all units d. Ties go
/// to the smaller negative part, then the smaller d.
NormalizationResult find_normalizing_dilate(const ResidueSet& a);

}  // namespace zfree
