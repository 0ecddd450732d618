#include "cnotpac/learners/special.hpp"

#include <cmath>

#include "cnotpac/error.hpp"

namespace cnotpac::learn {

void SingleMeasurementBatch::validate() const {
  const std::size_t n = measurement.num_qubits();
  if (!measurement.is_z_type() || measurement.is_identity_up_to_sign())
    throw PreconditionViolation("single-measurement batches need a non-identity Z-type measurement");
  for (const auto& s : samples) {
    if (s.state.num_qubits() != n) throw DimensionMismatch("state and measurement qubit counts differ");
    if (s.label == Label::Half) throw PreconditionViolation("single-measurement labels must be 0 or 1");
  }
}

SingleMeasurementBatch SingleMeasurementBatch::from_sample_set(const SampleSet& s) {
  if (s.samples.empty()) throw PreconditionViolation("empty sample set");
  SingleMeasurementBatch b{s.samples.front().measurement, {}};
  for (const auto& smp : s.samples) {
    if (!(smp.measurement == b.measurement)) throw PreconditionViolation("samples use different measurements");
    b.samples.push_back({smp.state, smp.label});
  }
  b.validate();
  return b;
}

SampleSet SingleMeasurementBatch::to_sample_set() const {
  SampleSet out{measurement.num_qubits(), {}};
  for (const auto& s : samples) out.add({s.state, measurement, s.label});
  return out;
}

std::optional<AffineSubspace> single_measurement_constraints(const SingleMeasurementBatch& batch) {
  batch.validate();
  const std::size_t n = batch.measurement.num_qubits();
  auto lift = [n](const BitVector& u, bool s) {
    BitVector v(n + 1);
    for (std::size_t i = 0; i < n; ++i)
      if (u.get(i)) v.set(i);
    if (s) v.set(n);
    return v;
  };
  std::optional<AffineSubspace> acc = AffineSubspace::whole(n + 1);
  for (const auto& smp : batch.samples) {
    // Label 1: (u, s) is an element of the state's Z-type group. Label 0: the
    // same with the sign flipped.
    std::vector<BitVector> gens;
    for (const auto& g : stab::z_type_generators(smp.state.group())) gens.push_back(lift(g.z(), g.negative()));
    const AffineSubspace c(lift(BitVector(n), smp.label == Label::Zero), gens);
    acc = f2::intersect_affine(*acc, c);
    if (!acc) return std::nullopt;
  }
  return acc;
}

SingleMeasurementResult learn_single_measurement(const SingleMeasurementBatch& batch, Rng& rng) {
  const auto feasible = single_measurement_constraints(batch);
  if (!feasible) throw EmptyIntersection("per-sample constraints have no common point");
  const std::size_t n = batch.measurement.num_qubits();
  auto u_part = [n](const BitVector& v) {
    BitVector u(n);
    for (std::size_t i = 0; i < n; ++i)
      if (v.get(i)) u.set(i);
    return u;
  };
  // Any point with u != 0 will do; the pulled-back Pauli cannot be +-I.
  BitVector point = feasible->offset();
  if (u_part(point).is_zero()) {
    bool moved = false;
    for (const auto& b : feasible->basis())
      if (!u_part(b).is_zero()) {
        point ^= b;
        moved = true;
        break;
      }
    if (!moved) throw EmptyIntersection("only the identity satisfies every sample");
  }
  const BitVector u = u_part(point);
  const bool s = point.get(n);
  const BitVector& p = batch.measurement.z();

  SingleMeasurementResult out{CnotCircuit(n, {}), 0};
  std::size_t draws = 0;
  const auto zs = f2::complete_to_basis({p}, n, rng, &draws);
  out.completion_draws += draws;
  const auto us = f2::complete_to_basis({u}, n, rng, &draws);
  out.completion_draws += draws;
  // G maps the p-basis onto the u-basis, so G p = u.
  const auto g = f2::BitMatrix::from_columns(us, n) * f2::invert(f2::BitMatrix::from_columns(zs, n));
  // C^dagger P C = (-1)^{sign(P) + qt.p} Z^{G p}; choose qt.p = s + sign(P).
  BitVector qt(n);
  if (s != batch.measurement.negative()) qt.set(p.first_one());
  out.circuit = CnotCircuit::from_pullback(g, qt);
  return out;
}

SingleMeasurementBatch random_single_measurement_batch(const CnotCircuit& hidden, const PauliOperator& measurement,
                                                       std::size_t m, Rng& rng) {
  const std::size_t n = hidden.num_qubits();
  SingleMeasurementBatch batch{measurement, {}};
  batch.validate();
  const auto t = hidden.tableau();
  while (batch.samples.size() < m) {
    cliff::GateList prep;
    for (std::size_t q = 0; q < n; ++q)
      if (coin(rng)) prep.push_back(cliff::Gate::h(static_cast<std::uint32_t>(q)));
    const auto mix = cliff::random_cnot_circuit(n, rng);
    prep.insert(prep.end(), mix.gates().begin(), mix.gates().end());
    const auto state = cliff::apply_circuit_to_state(CliffordTableau::from_gates(n, prep),
                                                     StabilizerState::basis(BitVector::random(n, rng)));
    const auto smp = cliff::make_sample(t, state, measurement);
    if (smp.label != Label::Half) batch.samples.push_back({smp.state, smp.label});
  }
  return batch;
}

CliffordTableau trivial_uniform_learner(std::size_t n, Rng& rng) { return cliff::random_clifford(n, 4 * n * n, rng); }

NonHalfEstimate non_half_frequency(const StabilizerState& rho, std::size_t draws, Rng& rng) {
  const std::size_t n = rho.num_qubits();
  NonHalfEstimate e;
  e.draws = draws;
  for (std::size_t i = 0; i < draws; ++i) {
    const auto p = PauliOperator::random(n, rng);
    if (p.is_identity_up_to_sign() || stab::measurement_expectation(rho, p) != Label::Half) ++e.non_half;
  }
  e.frequency = draws ? static_cast<double>(e.non_half) / static_cast<double>(draws) : 0;
  e.expected = std::ldexp(1.0, -static_cast<int>(n));
  e.sigma = draws ? std::sqrt(e.expected * (1 - e.expected) / static_cast<double>(draws)) : 0;
  return e;
}

}  // namespace cnotpac::learn
