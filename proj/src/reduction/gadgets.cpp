#include "cnotpac/reduction/gadgets.hpp"

#include <stdexcept>

#include "cnotpac/error.hpp"
#include "cnotpac/f2/affine.hpp"

namespace cnotpac::red {

using stab::Label;
using stab::StabilizerState;

namespace {

StabilizerState z_state(const std::vector<BitVector>& basis, std::size_t negated) {
  std::vector<PauliOperator> gens;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto g = PauliOperator::z_power(basis[i]);
    g.set_negative(i == negated);
    gens.push_back(std::move(g));
  }
  return StabilizerState(std::move(gens));
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Linking sample for two adjacent constrained columns. With a = v1 + v2 and
// d = w1 + w2 the column sum is a or a + d when both columns take the same
// branch and a + w1 or a + w2 when they do not.
LabeledSample link_sample(std::size_t n, std::size_t c1, std::size_t c2, const BitVector& v1, const BitVector& w1,
                          const BitVector& v2, const BitVector& w2) {
  const BitVector a = v1 ^ v2, d = w1 ^ w2;
  std::vector<BitVector> span_u;
  if (!a.is_zero()) span_u.push_back(a);
  if (!d.is_zero() && !f2::in_span(span_u, d)) span_u.push_back(d);

  // Case 1: w1 outside Span(a, d) -> the mismatched sums leave the span, so a
  // Z group on Span(a, d) with positive signs answers 1 exactly on the matched
  // sums (and 1/2 on the others).
  // Case 2: w1 in {a, a + d} -> the only nonzero mismatched sum is d; signs
  // f(a) = 1, f(d) = 0 with label 0 separate them.
  const bool case1 = !f2::in_span(span_u, w1);
  std::vector<PauliOperator> gens;
  for (const auto& u : span_u) {
    auto g = PauliOperator::z_power(u);
    if (!case1 && u == a) g.set_negative(true);
    gens.push_back(std::move(g));
  }
  const BitMatrix rows = BitMatrix::from_row_vectors(span_u, n);
  for (const auto& y : f2::null_space(rows)) gens.push_back(PauliOperator::x_power(y));
  StabilizerState state(std::move(gens));
  const Label label = case1 ? Label::One : Label::Zero;

  PauliOperator meas(n);
  meas.z().set(c1);
  meas.z().set(c2);

  // A zero sum means two equal columns, which no invertible pullback has.
  for (const auto& good : {a, a ^ d})
    if (!good.is_zero() && stab::measurement_expectation(state, PauliOperator::z_power(good)) != label)
      throw std::logic_error("linking sample rejects a matched column pair");
  for (const auto& bad : {a ^ w1, a ^ w2})
    if (!bad.is_zero() && stab::measurement_expectation(state, PauliOperator::z_power(bad)) == label)
      throw std::logic_error("linking sample accepts a mismatched column pair");
  return LabeledSample{std::move(state), std::move(meas), label};
}

}  // namespace

SampleSet constrain_pauli_samples(std::size_t n, const PauliOperator& target, const BitVector& v,
                                  const std::optional<BitVector>& w, Rng& rng) {
  if (target.num_qubits() != n || v.size() != n || (w && w->size() != n))
    throw DimensionMismatch("constraint vectors must have length n");
  if (v.is_zero()) throw PreconditionViolation("offset v must be nonzero");
  if (w && (w->is_zero() || *w == v)) throw PreconditionViolation("direction w must be nonzero and differ from v");
  if (target.is_identity_up_to_sign()) throw PreconditionViolation("target Pauli must not be the identity");

  std::vector<BitVector> seed{v};
  if (w) seed.push_back(*w);
  const auto basis = f2::complete_to_basis(seed, n, rng);

  SampleSet out{n, {}};
  // All positive: C^dagger P C is a positive Z-type Pauli.
  out.add({z_state(basis, kNone), target, Label::One});
  // Flipping a basis direction keeps label 1 only if that direction is absent.
  for (std::size_t i = w ? 2 : 1; i < n; ++i) out.add({z_state(basis, i), target, Label::One});
  // -Z^v: the v direction must be present.
  out.add({z_state(basis, 0), target, Label::Zero});
  return out;
}

SampleSet constrain_submatrix_samples(std::size_t n, const std::vector<std::size_t>& columns, const BitMatrix& v,
                                      const BitMatrix& w, Rng& rng) {
  const std::size_t k = columns.size();
  if (v.rows() != n || w.rows() != n || v.cols() != k || w.cols() != k)
    throw DimensionMismatch("V and W must be n x k with k the number of columns");
  if (k == 0) throw PreconditionViolation("at least one column is required");
  for (std::size_t j = 0; j < k; ++j) {
    if (columns[j] >= n) throw DimensionMismatch("column index out of range");
    for (std::size_t i = 0; i < j; ++i)
      if (columns[i] == columns[j]) throw PreconditionViolation("column indices must be distinct");
  }

  SampleSet out{n, {}};
  for (std::size_t j = 0; j < k; ++j) {
    PauliOperator p(n);
    p.z().set(columns[j]);
    out.append(constrain_pauli_samples(n, p, v.column(j), w.column(j), rng));
  }
  for (std::size_t j = 1; j < k; ++j)
    out.add(link_sample(n, columns[j - 1], columns[j], v.column(j - 1), w.column(j - 1), v.column(j), w.column(j)));
  return out;
}

ReductionResult reduce_formula_to_samples(const ArithFormula& f, Rng& rng, VertexOrder order) {
  WeightedDigraph g = formula_to_graph(f, order);
  NonSingularityInstance inst = graph_to_instance(g);
  if (!validate_simplified(inst)) throw std::logic_error("gadget graph produced a non-simplified instance");
  const std::size_t n = inst.size;

  SampleSet samples{n, {}};
  std::vector<bool> touched(n, false);
  for (std::size_t i = 0; i < inst.ms.size(); ++i) {
    const auto cols = inst.support_columns(i);
    if (cols.empty()) continue;
    std::vector<BitVector> vs, ws;
    for (std::size_t c : cols) {
      vs.push_back(inst.m0.column(c));
      ws.push_back(inst.ms[i].column(c));
      touched[c] = true;
    }
    samples.append(constrain_submatrix_samples(n, cols, BitMatrix::from_columns(vs, n), BitMatrix::from_columns(ws, n), rng));
  }
  // Remaining columns are pinned to their M0 value.
  for (std::size_t c = 0; c < n; ++c) {
    if (touched[c]) continue;
    PauliOperator p(n);
    p.z().set(c);
    samples.append(constrain_pauli_samples(n, p, inst.m0.column(c), std::nullopt, rng));
  }
  return ReductionResult{f, std::move(g), std::move(inst), std::move(samples)};
}

ReductionResult reduce_sat_to_samples(const CnfFormula& f, Rng& rng, VertexOrder order) {
  ReductionResult r = reduce_formula_to_samples(arithmetize_cnf(f), rng, order);
  // Keep one matrix per declared variable even if the formula skips some.
  while (r.instance.ms.size() < f.num_vars) r.instance.ms.emplace_back(r.instance.size, r.instance.size);
  r.graph.num_vars = std::max(r.graph.num_vars, f.num_vars);
  return r;
}

}  // namespace cnotpac::red
