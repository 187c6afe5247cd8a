#include "zfree/bitset.hpp"

#include <algorithm>
#include <bit>

namespace zfree {

void BitArray::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

std::size_t BitArray::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitArray::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

void BitArray::trim_tail() noexcept {
  const std::size_t rem = nbits_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

void BitArray::or_shifted_up(const BitArray& src, std::size_t shift) noexcept {
  if (shift >= nbits_) return;
  const std::size_t n = words_.size();
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  // Walk downward so that src may alias *this.
  for (std::size_t i = n; i-- > ws;) {
    Word v = src.words_[i - ws] << bs;
    if (bs != 0 && i - ws > 0) v |= src.words_[i - ws - 1] >> (kWordBits - bs);
    words_[i] |= v;
  }
  trim_tail();
}

void BitArray::or_shifted_down(const BitArray& src, std::size_t shift) noexcept {
  if (shift >= nbits_) return;
  const std::size_t n = words_.size();
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  // Walk upward so that src may alias *this.
  for (std::size_t i = 0; i + ws < n; ++i) {
    Word v = src.words_[i + ws] >> bs;
    if (bs != 0 && i + ws + 1 < n) v |= src.words_[i + ws + 1] << (kWordBits - bs);
    words_[i] |= v;
  }
}

void BitArray::or_rotated(const BitArray& src, std::size_t shift) noexcept {
  shift %= nbits_ == 0 ? 1 : nbits_;
  if (shift == 0) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= src.words_[i];
    return;
  }
  // Bits that would land at index >= size() wrap to index - size().
  if (&src == this) {
    const BitArray copy = src;
    or_shifted_up(copy, shift);
    or_shifted_down(copy, nbits_ - shift);
  } else {
    or_shifted_up(src, shift);
    or_shifted_down(src, nbits_ - shift);
  }
}

}  // namespace zfree
