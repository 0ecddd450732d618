#pragma once

#include <cstddef>
#include <vector>

#include "cnotpac/f2/bit_matrix.hpp"
#include "cnotpac/reduction/formula.hpp"

namespace cnotpac::red {

using f2::BitMatrix;

/// Edge weight: the constant 1 (var == 0) or the variable x_var.
struct Edge {
  std::size_t from, to;
  std::size_t var = 0;
  bool operator==(const Edge&) const = default;
};

/// Closed series-parallel gadget graph: t -> s has weight 1 and every vertex
/// other than s carries a weight-1 self-loop.
struct WeightedDigraph {
  std::size_t num_vertices = 0;
  std::size_t s = 0, t = 0;
  std::size_t num_vars = 0;
  std::vector<Edge> edges;  // includes the closing edge and the self-loops
};

enum class VertexOrder {
  /// s, t, then vertices as the recursive construction creates them.
  Creation,
  /// s first, then internal vertices in order (a product lists its left
  /// part, the junction, then its right part), t last. Reproduces the
  /// printed worked example bit for bit.
  WorkedExample
};

WeightedDigraph formula_to_graph(const ArithFormula& f, VertexOrder order = VertexOrder::Creation);

/// M(x) = M0 + sum_i x_i M_i.
struct NonSingularityInstance {
  std::size_t size = 0;
  BitMatrix m0;
  std::vector<BitMatrix> ms;

  std::size_t num_vars() const noexcept { return ms.size(); }
  /// bit i-1 of the assignment is alpha_i.
  BitMatrix evaluate(const BitVector& assignment) const;
  /// Columns on which M_i is nonzero, ascending.
  std::vector<std::size_t> support_columns(std::size_t i) const;
  bool operator==(const NonSingularityInstance&) const = default;
};

/// M(x)_{ij} = weight of the edge i -> j.
NonSingularityInstance graph_to_instance(const WeightedDigraph& g);

/// Disjoint column supports; on those columns the M0 column is nonzero and
/// differs from the M_i column. Variables with M_i = 0 are allowed.
bool validate_simplified(const NonSingularityInstance& inst);

}  // namespace cnotpac::red
