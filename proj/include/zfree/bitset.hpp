#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zfree {

/// Fixed-length, word-packed bit array. Bits past size() are kept clear.
class BitArray {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitArray() = default;
  explicit BitArray(std::size_t nbits) : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return nbits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::vector<Word>& words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool any() const noexcept;

  /// this |= src << shift, truncated to size(). src must have the same size.
  void or_shifted_up(const BitArray& src, std::size_t shift) noexcept;
  /// this |= src >> shift.
  void or_shifted_down(const BitArray& src, std::size_t shift) noexcept;
  /// this |= src rotated toward higher indices by shift (mod size()).
  void or_rotated(const BitArray& src, std::size_t shift) noexcept;

  /// Calls f(i) for every set bit in ascending order.
  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const BitArray&, const BitArray&) = default;

 private:
  void trim_tail() noexcept;

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

}  // namespace zfree
