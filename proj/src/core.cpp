#include "zfree/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace zfree {

Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt of negative value " + std::to_string(n));
  if (n < 2) return n;
  if (n < 4) return 1;
  // Start above the root; Newton decreases monotonically to floor(sqrt(n)).
  Int x = n;
  Int y = x / 2 + 1;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (Int f = 5; f <= n / f; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(Int p) : p_(p) {
  if (p == 2) throw std::invalid_argument("modulus must be an odd prime, got 2");
  if (!is_prime(p)) throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
}

SignedRep canonical_rep(Int a, PrimeModulus p) {
  if (a < 0 || a >= p.value()) {
    throw std::out_of_range("residue " + std::to_string(a) + " outside [0, " + std::to_string(p.value()) + ")");
  }
  return SignedRep(a > p.half() ? a - p.value() : a, p);
}

Int abs_p(Int a, PrimeModulus p) {
  const Int v = canonical_rep(a, p).value();
  return v < 0 ? -v : v;
}

Int mod_inverse(Int a, PrimeModulus p) {
  Int r0 = p.value(), r1 = p.reduce(a);
  if (r1 == 0) throw std::invalid_argument("0 has no inverse mod " + std::to_string(p.value()));
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return p.reduce(t0);
}

ResidueSet::ResidueSet(PrimeModulus p, std::vector<Int> residues) : p_(p), elems_(std::move(residues)) {
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const Int r = elems_[i];
    if (r == 0) throw std::invalid_argument("residue set may not contain 0");
    if (r < 0 || r >= p.value()) {
      throw std::invalid_argument("residue " + std::to_string(r) + " outside [1, " + std::to_string(p.value() - 1) + "]");
    }
    if (i > 0 && elems_[i - 1] == r) throw std::invalid_argument("duplicate residue " + std::to_string(r));
  }
}

ResidueSet ResidueSet::from_signed(PrimeModulus p, std::span<const Int> values) {
  std::vector<Int> residues;
  residues.reserve(values.size());
  for (Int v : values) residues.push_back(p.reduce(v));
  return ResidueSet(p, std::move(residues));
}

bool ResidueSet::contains(Int residue) const {
  return std::binary_search(elems_.begin(), elems_.end(), residue);
}

std::vector<Int> ResidueSet::signed_values() const {
  std::vector<Int> out;
  out.reserve(elems_.size());
  for (Int r : elems_) out.push_back(canonical_rep(r, p_).value());
  std::sort(out.begin(), out.end());
  return out;
}

__extension__ using Wide = __int128;

ResidueSet dilate_set(const ResidueSet& a, Int d) {
  const PrimeModulus p = a.modulus();
  const Int unit = p.reduce(d);
  if (unit == 0) throw std::invalid_argument("dilation factor is 0 mod " + std::to_string(p.value()));
  std::vector<Int> out;
  out.reserve(a.size());
  for (Int r : a) out.push_back(static_cast<Int>((static_cast<Wide>(r) * unit) % p.value()));
  return ResidueSet(p, std::move(out));
}

ResidueSet negate_set(const ResidueSet& a) {
  const Int p = a.modulus().value();
  std::vector<Int> out;
  out.reserve(a.size());
  for (Int r : a) out.push_back(p - r);
  return ResidueSet(a.modulus(), std::move(out));
}

bool intersects(const ResidueSet& a, const ResidueSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

WeightSummary weight_summary(const ResidueSet& a) {
  WeightSummary w;
  const PrimeModulus p = a.modulus();
  for (Int r : a) {
    const Int v = canonical_rep(r, p).value();
    if (v > 0) w.positive_part += v; else w.negative_part -= v;
  }
  w.total = w.positive_part + w.negative_part;
  w.cardinality = a.size();
  w.excess = std::abs(std::sqrt(2.0 * static_cast<double>(p.value())) - static_cast<double>(a.size()));
  return w;
}

std::strong_ordering compare_card_to_sqrt2p(std::size_t card, PrimeModulus p) {
  const auto c = static_cast<Int>(card);
  return c * c <=> 2 * p.value();
}

}  // namespace zfree
