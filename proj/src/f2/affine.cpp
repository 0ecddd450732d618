#include "cnotpac/f2/affine.hpp"

#include <algorithm>

#include "cnotpac/error.hpp"

namespace cnotpac::f2 {

namespace {

// Incremental echelon basis; rows are stored reduced on each other's pivots.
struct Echelon {
  std::vector<BitVector> rows;
  std::vector<std::size_t> pivots;

  void reduce(BitVector& v) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (v.get(pivots[i])) v ^= rows[i];
  }

  // Returns false if v was dependent.
  bool insert(BitVector v) {
    reduce(v);
    if (v.is_zero()) return false;
    const std::size_t p = v.first_one();
    for (auto& r : rows)
      if (r.get(p)) r ^= v;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

}  // namespace

AffineSubspace::AffineSubspace(BitVector offset) : offset_(std::move(offset)) {}

AffineSubspace::AffineSubspace(BitVector offset, const std::vector<BitVector>& generators)
    : offset_(std::move(offset)) {
  Echelon e;
  for (const auto& g : generators) {
    if (g.size() != offset_.size()) throw DimensionMismatch("generator length differs from offset length");
    e.insert(g);
  }
  e.reduce(offset_);
  std::vector<std::size_t> order(e.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return e.pivots[a] < e.pivots[b]; });
  for (std::size_t i : order) basis_.push_back(e.rows[i]);
}

AffineSubspace AffineSubspace::whole(std::size_t n) {
  std::vector<BitVector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(BitVector::unit(n, i));
  return AffineSubspace(BitVector(n), gens);
}

bool AffineSubspace::contains(const BitVector& p) const {
  if (p.size() != ambient()) throw DimensionMismatch("point length differs from ambient dimension");
  BitVector r = p ^ offset_;
  for (const auto& b : basis_)
    if (r.get(b.first_one())) r ^= b;
  return r.is_zero();
}

std::vector<BitVector> AffineSubspace::points() const {
  if (dim() >= 32) throw EnumerationLimit("affine subspace too large to enumerate");
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << dim());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim()); ++mask) {
    BitVector p = offset_;
    for (std::size_t i = 0; i < dim(); ++i)
      if ((mask >> i) & 1U) p ^= basis_[i];
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<AffineSubspace> intersect_affine(const AffineSubspace& a, const AffineSubspace& b) {
  const std::size_t n = a.ambient();
  if (b.ambient() != n) throw DimensionMismatch("affine subspaces live in different dimensions");
  const std::size_t k1 = a.dim(), k2 = b.dim();
  // Rows are [vector | tag]; tag bit i < k1 marks a's generator i, k1 + j marks b's.
  // A row that reduces to a zero vector part gives sum_a = sum_b, a direction
  // of the intersection. Reducing o_a + o_b yields the coefficients of a point.
  const std::size_t width = n + k1 + k2;
  auto tagged = [&](const BitVector& v, std::size_t tag) {
    BitVector r(width);
    for (std::size_t i = 0; i < n; ++i)
      if (v.get(i)) r.set(i);
    r.set(n + tag);
    return r;
  };
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < k1; ++i) rows.push_back(tagged(a.basis()[i], i));
  for (std::size_t j = 0; j < k2; ++j) rows.push_back(tagged(b.basis()[j], k1 + j));

  std::vector<std::size_t> pivot_rows;
  std::vector<BitVector> kernel_tags;
  std::vector<BitVector> reduced;
  std::vector<std::size_t> pivots;
  for (auto& r : rows) {
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (r.get(pivots[i])) r ^= reduced[i];
    const std::size_t p = r.first_one();
    if (p < n) {
      reduced.push_back(r);
      pivots.push_back(p);
    } else {
      kernel_tags.push_back(r);
    }
  }

  auto combine_a = [&](const BitVector& tag_row) {
    BitVector v(n);
    for (std::size_t i = 0; i < k1; ++i)
      if (tag_row.get(n + i)) v ^= a.basis()[i];
    return v;
  };

  BitVector target(width);
  {
    const BitVector diff = a.offset() ^ b.offset();
    for (std::size_t i = 0; i < n; ++i)
      if (diff.get(i)) target.set(i);
  }
  for (std::size_t i = 0; i < reduced.size(); ++i)
    if (target.get(pivots[i])) target ^= reduced[i];
  for (std::size_t i = 0; i < n; ++i)
    if (target.get(i)) return std::nullopt;

  BitVector point = a.offset() ^ combine_a(target);
  std::vector<BitVector> dirs;
  for (const auto& t : kernel_tags) dirs.push_back(combine_a(t));
  return AffineSubspace(std::move(point), dirs);
}

bool in_span(const std::vector<BitVector>& vs, const BitVector& v) {
  Echelon e;
  for (const auto& x : vs) e.insert(x);
  BitVector r = v;
  e.reduce(r);
  return r.is_zero();
}

std::vector<BitVector> complete_to_basis(const std::vector<BitVector>& vectors, std::size_t n, Rng& rng,
                                         std::size_t* draws) {
  Echelon e;
  std::vector<BitVector> out;
  for (const auto& v : vectors) {
    if (v.size() != n) throw DimensionMismatch("basis vector length differs from n");
    if (v.is_zero()) throw PreconditionViolation("cannot complete a basis containing the zero vector");
    if (!e.insert(v)) throw PreconditionViolation("input vectors are linearly dependent");
    out.push_back(v);
  }
  std::size_t count = 0;
  while (out.size() < n) {
    BitVector v = BitVector::random(n, rng);
    ++count;
    if (e.insert(v)) out.push_back(std::move(v));
  }
  if (draws) *draws = count;
  return out;
}

}  // namespace cnotpac::f2
