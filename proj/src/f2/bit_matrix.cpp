#include "cnotpac/f2/bit_matrix.hpp"

#include <algorithm>

#include "cnotpac/error.hpp"

namespace cnotpac::f2 {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    m.set_row(r, BitVector::from_string(rows[r]));
  }
  return m;
}

BitMatrix BitMatrix::from_row_vectors(const std::vector<BitVector>& rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector>& cols, std::size_t rows) {
  BitMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, BitVector::random(cols, rng));
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  std::copy(row_words(r).begin(), row_words(r).end(), v.words().begin());
  return v;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) throw DimensionMismatch("row length does not match column count");
  std::copy(v.words().begin(), v.words().end(), row_words(r).begin());
}

void BitMatrix::set_column(std::size_t c, const BitVector& v) {
  if (v.size() != rows_) throw DimensionMismatch("column length does not match row count");
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row_words(a).begin(), row_words(a).end(), row_words(b).begin());
}

bool BitMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  BitMatrix p(rows_, o.cols_);
  // Row r of the product is the XOR of rows k of o selected by row r of this.
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(r, k)) xor_into(p.row_words(r), o.row_words(k));
  return p;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (and_popcount(row_words(r), v.words()) & 1U) out.set(r);
  return out;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  if (!data_.empty()) xor_into(std::span<Word>(data_), std::span<const Word>(o.data_));
  return *this;
}

std::vector<std::string> BitMatrix::to_rows() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r).to_string());
  return out;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += '\n';
    s += row(r).to_string();
  }
  return s;
}

std::size_t rank(const BitMatrix& m) {
  BitMatrix a = m;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < a.cols() && rk < a.rows(); ++c) {
    std::size_t piv = rk;
    while (piv < a.rows() && !a.get(piv, c)) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, rk);
    for (std::size_t r = rk + 1; r < a.rows(); ++r)
      if (a.get(r, c)) a.add_row(r, rk);
    ++rk;
  }
  return rk;
}

bool determinant(const BitMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  return rank(m) == m.rows();
}

BitMatrix invert(const BitMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  BitMatrix a = m;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !a.get(piv, c)) ++piv;
    if (piv == n) throw SingularMatrix();
    a.swap_rows(piv, c);
    inv.swap_rows(piv, c);
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && a.get(r, c)) {
        a.add_row(r, c);
        inv.add_row(r, c);
      }
  }
  return inv;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  // Eliminate on [m | b].
  const std::size_t rows = m.rows(), cols = m.cols();
  BitMatrix a(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c)
      if (m.get(r, c)) a.set(r, c);
    if (b.get(r)) a.set(r, cols);
  }
  std::vector<std::size_t> pivots;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && !a.get(piv, c)) ++piv;
    if (piv == rows) continue;
    a.swap_rows(piv, rk);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rk && a.get(r, c)) a.add_row(r, rk);
    pivots.push_back(c);
    ++rk;
  }
  for (std::size_t r = rk; r < rows; ++r)
    if (a.get(r, cols)) return std::nullopt;
  BitVector x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (a.get(i, cols)) x.set(pivots[i]);
  return x;
}

std::vector<BitVector> null_space(const BitMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  BitMatrix a = m;
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(cols, false);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && !a.get(piv, c)) ++piv;
    if (piv == rows) continue;
    a.swap_rows(piv, rk);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rk && a.get(r, c)) a.add_row(r, rk);
    pivots.push_back(c);
    is_pivot[c] = true;
    ++rk;
  }
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector x(cols);
    x.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (a.get(i, f)) x.set(pivots[i]);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace cnotpac::f2
