#include "cnotpac/f2/bit_vector.hpp"

#include "cnotpac/error.hpp"

namespace cnotpac::f2 {

namespace {
void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch("bit vector lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace

BitVector BitVector::unit(std::size_t len, std::size_t i) {
  if (i >= len) throw DimensionMismatch("unit vector index out of range");
  BitVector v(len);
  v.set(i);
  return v;
}

BitVector BitVector::from_uint(std::size_t len, std::uint64_t bits) {
  if (len > kWordBits) throw DimensionMismatch("from_uint supports at most 64 bits");
  BitVector v(len);
  if (len == 0) return v;
  v.words_[0] = len == kWordBits ? bits : bits & ((Word{1} << len) - 1);
  return v;
}

BitVector BitVector::from_string(std::string_view s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i);
    else if (s[i] != '0')
      throw ParseError(0, "bit string may only contain 0 and 1, got '" + std::string(s) + "'");
  }
  return v;
}

BitVector BitVector::random(std::size_t len, Rng& rng) {
  BitVector v(len);
  for (auto& w : v.words_) w = rng();
  if (len % kWordBits) v.words_.back() &= (Word{1} << (len % kWordBits)) - 1;
  return v;
}

bool BitVector::is_zero() const noexcept {
  for (Word w : words_)
    if (w) return false;
  return true;
}

std::size_t BitVector::first_one() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return k * kWordBits + static_cast<std::size_t>(__builtin_ctzll(words_[k]));
  return len_;
}

bool BitVector::dot(const BitVector& o) const {
  require_same(len_, o.len_);
  return and_popcount(words_, o.words_) & 1U;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  require_same(len_, o.len_);
  xor_into(words_, o.words_);
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
  require_same(len_, o.len_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
  return *this;
}

bool BitVector::operator<(const BitVector& o) const {
  if (len_ != o.len_) return len_ < o.len_;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    const Word diff = words_[k] ^ o.words_[k];
    if (diff) {
      const Word low = diff & (~diff + 1);
      return (o.words_[k] & low) != 0;
    }
  }
  return false;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

}  // namespace cnotpac::f2
