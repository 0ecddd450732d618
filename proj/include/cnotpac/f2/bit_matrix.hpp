#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cnotpac/f2/bit_vector.hpp"

namespace cnotpac::f2 {

/// Dense GF(2) matrix, rows packed into 64-bit words with a fixed stride.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);
  /// Each string is one row, character j giving column j.
  static BitMatrix from_rows(const std::vector<std::string>& rows);
  static BitMatrix from_row_vectors(const std::vector<BitVector>& rows, std::size_t cols);
  static BitMatrix from_columns(const std::vector<BitVector>& cols, std::size_t rows);
  static BitMatrix random(std::size_t rows, std::size_t cols, Rng& rng);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U; }
  void set(std::size_t r, std::size_t c, bool v = true) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = v ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

  std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

  BitVector row(std::size_t r) const;
  BitVector column(std::size_t c) const;
  void set_row(std::size_t r, const BitVector& v);
  void set_column(std::size_t c, const BitVector& v);

  /// row dst ^= row src
  void add_row(std::size_t dst, std::size_t src) { xor_into(row_words(dst), row_words(src)); }
  void swap_rows(std::size_t a, std::size_t b);

  bool is_zero() const noexcept;
  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& o) const;
  /// Matrix times column vector.
  BitVector operator*(const BitVector& v) const;
  BitMatrix& operator^=(const BitMatrix& o);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a ^= b; }

  bool operator==(const BitMatrix& o) const = default;

  std::vector<std::string> to_rows() const;
  std::string to_string() const;  // rows joined by '\n'

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<Word> data_;
};

std::size_t rank(const BitMatrix& m);
/// 1 iff m is invertible. Throws DimensionMismatch for non-square input.
bool determinant(const BitMatrix& m);
/// Throws SingularMatrix when m is not invertible.
BitMatrix invert(const BitMatrix& m);
/// Some x with m*x = b, or nullopt when b is outside the column space.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);
/// Basis of {x : m x = 0}.
std::vector<BitVector> null_space(const BitMatrix& m);

}  // namespace cnotpac::f2
