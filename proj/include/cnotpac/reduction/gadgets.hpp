#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cnotpac/clifford/sample.hpp"
#include "cnotpac/reduction/graph.hpp"

namespace cnotpac::red {

using stab::PauliOperator;

/// Samples forcing C^dagger P C into {+Z^v, +Z^{v+w}} (w given, n samples) or
/// {+Z^v} (w absent, n + 1 samples). Requires v != 0 and, when w is given,
/// w != 0 and w != v. The basis completion around v (and w) is drawn from rng.
SampleSet constrain_pauli_samples(std::size_t n, const PauliOperator& target, const BitVector& v,
                                  const std::optional<BitVector>& w, Rng& rng);

/// Samples forcing the pullback columns `columns` (G = theta^{-1}, so
/// C^dagger Z_c C = +-Z^{G e_c}) to equal V + alpha W for one common alpha, with
/// positive signs. Each column gets the single-column gadget (n samples) and
/// each adjacent pair one linking sample: kn + k - 1 in total.
SampleSet constrain_submatrix_samples(std::size_t n, const std::vector<std::size_t>& columns, const BitMatrix& v,
                                      const BitMatrix& w, Rng& rng);

struct ReductionResult {
  ArithFormula formula;
  WeightedDigraph graph;
  NonSingularityInstance instance;
  SampleSet samples;
};

/// Formula -> graph -> instance -> samples. The samples admit a consistent
/// CNOT circuit iff some M(a) is invertible iff the formula is satisfiable;
/// the witness has pullback M(a) and zero pullback signs.
ReductionResult reduce_formula_to_samples(const ArithFormula& f, Rng& rng, VertexOrder order = VertexOrder::Creation);
ReductionResult reduce_sat_to_samples(const CnfFormula& f, Rng& rng, VertexOrder order = VertexOrder::Creation);

}  // namespace cnotpac::red
