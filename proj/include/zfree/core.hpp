#pragma once

// Residue arithmetic modulo an odd prime and the finite-set model used by
// every other part of the library.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zfree {

using Int = std::int64_t;

/// Floor of the square root of n >= 0, by integer Newton iteration.
Int isqrt(Int n);

bool is_prime(Int n);

/// An odd prime p >= 3. Construction rejects 2 and composites.
///
/// For p = 3 and p = 5 the type is valid but the extremal-cardinality
/// theorems are asymptotic and may not describe what happens there.
class PrimeModulus {
 public:
  explicit PrimeModulus(Int p);

  Int value() const noexcept { return p_; }
  /// (p - 1) / 2, the largest absolute value of a canonical representative.
  Int half() const noexcept { return (p_ - 1) / 2; }

  /// Reduces any integer into [0, p).
  Int reduce(Int x) const noexcept {
    Int r = x % p_;
    return r < 0 ? r + p_ : r;
  }

  friend auto operator<=>(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  Int p_;
};

/// The canonical integer representative of a residue, lying in
/// [-(p-1)/2, (p-1)/2].
class SignedRep {
 public:
  SignedRep(Int value, PrimeModulus modulus) noexcept : value_(value), modulus_(modulus) {}

  Int value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return modulus_; }
  Int residue() const noexcept { return modulus_.reduce(value_); }

  friend bool operator==(const SignedRep&, const SignedRep&) = default;

 private:
  Int value_;
  PrimeModulus modulus_;
};

/// Requires 0 <= a < p; throws std::out_of_range otherwise.
SignedRep canonical_rep(Int a, PrimeModulus p);
Int abs_p(Int a, PrimeModulus p);

/// Multiplicative inverse of a unit, by the extended Euclidean algorithm.
Int mod_inverse(Int a, PrimeModulus p);

/// A set of distinct nonzero residues mod p, kept in ascending order.
class ResidueSet {
 public:
  explicit ResidueSet(PrimeModulus p) : p_(p) {}

  /// Residues must lie in [1, p-1] and be pairwise distinct; 0, out-of-range
  /// values and duplicates throw std::invalid_argument.
  ResidueSet(PrimeModulus p, std::vector<Int> residues);

  /// Each value is reduced mod p first (so -2 denotes p - 2).
  static ResidueSet from_signed(PrimeModulus p, std::span<const Int> values);

  PrimeModulus modulus() const noexcept { return p_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(Int residue) const;

  std::span<const Int> elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  /// Canonical representatives, sorted ascending by signed value.
  std::vector<Int> signed_values() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  PrimeModulus p_;
  std::vector<Int> elems_;
};

/// d * A for a unit d. Throws std::invalid_argument when d = 0 mod p.
ResidueSet dilate_set(const ResidueSet& a, Int d);
/// -A = {p - a : a in A}.
ResidueSet negate_set(const ResidueSet& a);

bool intersects(const ResidueSet& a, const ResidueSet& b);

struct WeightSummary {
  Int total = 0;          // sum of |a|_p
  Int positive_part = 0;  // over canonical reps > 0
  Int negative_part = 0;  // over canonical reps < 0, as a positive number
  std::size_t cardinality = 0;
  double excess = 0.0;    // |sqrt(2p) - |A||

  friend bool operator==(const WeightSummary&, const WeightSummary&) = default;
};

WeightSummary weight_summary(const ResidueSet& a);

/// Exact comparison of a cardinality against sqrt(2p), done as card^2 vs 2p.
std::strong_ordering compare_card_to_sqrt2p(std::size_t card, PrimeModulus p);

}  // namespace zfree
