#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cnotpac/f2/bit_vector.hpp"

namespace cnotpac::f2 {

/// offset + Span(basis), kept canonical: the basis is in reduced row-echelon
/// form (pivot = lowest set bit, sorted by pivot) and the offset is zero on
/// every pivot. Two subspaces are equal iff their members compare equal.
class AffineSubspace {
 public:
  /// The single point `offset`.
  explicit AffineSubspace(BitVector offset);
  /// Generators may be dependent; they are reduced.
  AffineSubspace(BitVector offset, const std::vector<BitVector>& generators);

  static AffineSubspace whole(std::size_t n);

  std::size_t ambient() const noexcept { return offset_.size(); }
  std::size_t dim() const noexcept { return basis_.size(); }
  const BitVector& offset() const noexcept { return offset_; }
  const std::vector<BitVector>& basis() const noexcept { return basis_; }

  bool contains(const BitVector& p) const;
  /// All 2^dim points in the order of the binary counter over the basis.
  std::vector<BitVector> points() const;

  bool operator==(const AffineSubspace& o) const = default;

 private:
  BitVector offset_;
  std::vector<BitVector> basis_;
};

/// Exact intersection, nullopt when empty.
std::optional<AffineSubspace> intersect_affine(const AffineSubspace& a, const AffineSubspace& b);

/// True iff `v` is in the span of `vs`.
bool in_span(const std::vector<BitVector>& vs, const BitVector& v);

/// Extends independent nonzero `vectors` to a basis of GF(2)^n by drawing
/// uniform random vectors and rejecting dependent ones. The result starts with
/// the inputs. `draws`, when given, receives the number of random draws.
std::vector<BitVector> complete_to_basis(const std::vector<BitVector>& vectors, std::size_t n, Rng& rng,
                                         std::size_t* draws = nullptr);

}  // namespace cnotpac::f2
