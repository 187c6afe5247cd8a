#include "zfree/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace zfree {

SumBitsetModP::SumBitsetModP(PrimeModulus p, BitArray bits) : p_(p), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(p.value())) throw std::invalid_argument("bitset width must equal p");
}

std::vector<Int> SumBitsetModP::residues() const {
  std::vector<Int> out;
  bits_.for_each_set([&](std::size_t i) { out.push_back(static_cast<Int>(i)); });
  return out;
}

SumBitsetModP subset_sums_mod_p(const ResidueSet& a) {
  const PrimeModulus p = a.modulus();
  const auto width = static_cast<std::size_t>(p.value());
  BitArray sums(width);
  BitArray prev(width);
  for (Int r : a) {
    const auto shift = static_cast<std::size_t>(r);
    prev = sums;
    // Rotation by r: bits at index >= p - r wrap around to index - (p - r).
    sums.or_shifted_up(prev, shift);
    sums.or_shifted_down(prev, width - shift);
    sums.set(shift);
  }
  return SumBitsetModP(p, std::move(sums));
}

SumBitsetModP subset_sums_mod_p_reference(const ResidueSet& a) {
  const PrimeModulus p = a.modulus();
  const Int n = p.value();
  std::vector<unsigned char> reach(static_cast<std::size_t>(n), 0);
  std::vector<unsigned char> next;
  for (Int r : a) {
    next = reach;
    for (Int s = 0; s < n; ++s) {
      if (reach[static_cast<std::size_t>(s)]) next[static_cast<std::size_t>((s + r) % n)] = 1;
    }
    next[static_cast<std::size_t>(r)] = 1;
    reach.swap(next);
  }
  BitArray bits(static_cast<std::size_t>(n));
  for (Int s = 0; s < n; ++s) {
    if (reach[static_cast<std::size_t>(s)]) bits.set(static_cast<std::size_t>(s));
  }
  return SumBitsetModP(p, std::move(bits));
}

bool is_zero_free(const ResidueSet& a) { return !subset_sums_mod_p(a).contains(0); }

bool is_incomplete(const ResidueSet& a) {
  const SumBitsetModP sums = subset_sums_mod_p(a);
  const std::size_t covered = sums.count() + (sums.contains(0) ? 0 : 1);
  return covered < static_cast<std::size_t>(a.modulus().value());
}

SumSetInteger::SumSetInteger(Int lo, Int hi) : lo_(lo), hi_(hi), bits_(static_cast<std::size_t>(hi - lo + 1)) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
}

std::vector<Int> SumSetInteger::values() const {
  std::vector<Int> out;
  bits_.for_each_set([&](std::size_t i) { out.push_back(lo_ + static_cast<Int>(i)); });
  return out;
}

SumBitsetModP SumSetInteger::reduce_mod(PrimeModulus p) const {
  BitArray bits(static_cast<std::size_t>(p.value()));
  bits_.for_each_set([&](std::size_t i) { bits.set(static_cast<std::size_t>(p.reduce(lo_ + static_cast<Int>(i)))); });
  return SumBitsetModP(p, std::move(bits));
}

SumSetInteger subset_sums_integer(std::span<const Int> values) {
  std::vector<Int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("integer set has duplicate elements");
  }
  Int lo = 0, hi = 0;
  for (Int v : sorted) (v < 0 ? lo : hi) += v;

  SumSetInteger out(lo, hi);
  BitArray& bits = out.bits();
  for (Int v : sorted) {
    // s -> s + v is an index shift by |v| in the offset array.
    if (v > 0) bits.or_shifted_up(bits, static_cast<std::size_t>(v));
    else if (v < 0) bits.or_shifted_down(bits, static_cast<std::size_t>(-v));
    bits.set(static_cast<std::size_t>(v - lo));
  }
  return out;
}

SumSetInteger subset_sums_integer(const ResidueSet& a) {
  const std::vector<Int> reps = a.signed_values();
  return subset_sums_integer(std::span<const Int>(reps));
}

IntInterval interval_extend(Int m, Int len, std::span<const Int> b) {
  if (len < 1) throw std::invalid_argument("interval length must be at least 1");
  std::vector<Int> sorted(b.begin(), b.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("extension set has duplicate elements");
  }
  Int neg = 0, pos = 0;
  for (Int v : sorted) {
    if (v > len || v < -len) {
      throw std::invalid_argument("element " + std::to_string(v) + " exceeds interval length " + std::to_string(len));
    }
    (v < 0 ? neg : pos) += v;
  }
  return {m + neg, m + len - 1 + pos};
}

std::vector<Int> pair_sum_cover(std::span<const Int> b, Int q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  std::vector<unsigned char> in(static_cast<std::size_t>(q) + 1, 0);
  for (Int v : b) {
    if (v < 1 || v > q) throw std::invalid_argument("element " + std::to_string(v) + " outside [1, q]");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Int> uncovered;
  const Int top = 13 * q / 8;
  for (Int n = q + 1; n <= top; ++n) {
    bool hit = false;
    for (Int x = std::max<Int>(1, n - q); 2 * x < n && !hit; ++x) {
      hit = in[static_cast<std::size_t>(x)] && in[static_cast<std::size_t>(n - x)];
    }
    if (!hit) uncovered.push_back(n);
  }
  return uncovered;
}

NormalizationResult find_normalizing_dilate(const ResidueSet& a) {
  if (a.empty()) throw std::invalid_argument("cannot normalize the empty set");
  const PrimeModulus p = a.modulus();
  const Int n = p.value();
  const Int half = p.half();

  Int best_d = 0;
  Int best_total = std::numeric_limits<Int>::max();
  Int best_neg = std::numeric_limits<Int>::max();
  std::size_t ties = 0;
  for (Int d = 1; d < n; ++d) {
    Int total = 0, neg = 0;
    for (Int r : a) {
      const Int x = (r * d) % n;
      if (x > half) {
        total += n - x;
        neg += n - x;
      } else {
        total += x;
      }
    }
    if (total < best_total) {
      best_total = total;
      best_neg = neg;
      best_d = d;
      ties = 1;
    } else if (total == best_total) {
      ++ties;
      if (neg < best_neg) {
        best_neg = neg;
        best_d = d;
      }
    }
  }
  return {best_d, weight_summary(dilate_set(a, best_d)), ties};
}

}  // namespace zfree
