#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnotpac/f2/kernels.hpp"
#include "cnotpac/rng.hpp"

namespace cnotpac::f2 {

/// Packed GF(2) vector. Bit i lives in word i/64 at position i%64; bits past
/// size() are kept zero so word-wise comparison and hashing are exact.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

  static BitVector unit(std::size_t len, std::size_t i);
  /// Low `len` bits of `bits` (len <= 64).
  static BitVector from_uint(std::size_t len, std::uint64_t bits);
  /// Parses "0110" with character i giving coordinate i.
  static BitVector from_string(std::string_view s);
  static BitVector random(std::size_t len, Rng& rng);

  std::size_t size() const noexcept { return len_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (v)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  bool operator[](std::size_t i) const { return get(i); }

  bool is_zero() const noexcept;
  std::size_t weight() const { return popcount(words_); }
  /// Index of the lowest set bit, or size() when zero.
  std::size_t first_one() const noexcept;
  /// Inner product over GF(2).
  bool dot(const BitVector& o) const;
  /// First 64 coordinates as an integer (bit i = coordinate i).
  std::uint64_t to_uint() const noexcept { return words_.empty() ? 0 : words_[0]; }

  BitVector& operator^=(const BitVector& o);
  BitVector& operator&=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator+(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  bool operator==(const BitVector& o) const = default;
  /// Lexicographic on coordinates 0, 1, ... with 0 < 1.
  bool operator<(const BitVector& o) const;

  std::string to_string() const;

  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

}  // namespace cnotpac::f2
