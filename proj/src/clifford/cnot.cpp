#include "cnotpac/clifford/cnot.hpp"

#include <algorithm>

#include "cnotpac/error.hpp"

namespace cnotpac::cliff {

CnotCircuit::CnotCircuit(std::size_t n, GateList gates)
    : n_(n), gates_(std::move(gates)), theta_(BitMatrix::identity(n)), q_(n) {
  for (const auto& g : gates_) {
    g.validate(n_);
    if (g.kind == GateKind::CNOT) {
      theta_.add_row(g.a, g.b);
    } else if (g.kind == GateKind::X) {
      // X_a negates every Z image with support on qubit a.
      for (std::size_t j = 0; j < n_; ++j)
        if (theta_.get(g.a, j)) q_.flip(j);
    } else {
      throw PreconditionViolation("CNOT circuits may only contain X and CNOT gates, got " + g.to_string());
    }
  }
}

BitMatrix CnotCircuit::pullback() const { return f2::invert(theta_); }

BitVector CnotCircuit::pullback_signs() const { return pullback().transpose() * q_; }

CnotCircuit CnotCircuit::from_pullback(const BitMatrix& g, const BitVector& qt) {
  BitMatrix theta;
  try {
    theta = f2::invert(g);
  } catch (const SingularMatrix&) {
    throw SingularTheta();
  }
  return synthesize_cnot_from_theta(theta, theta.transpose() * qt);
}

CnotCircuit synthesize_cnot_from_theta(const BitMatrix& theta, const BitVector& q) {
  const std::size_t n = theta.rows();
  if (!theta.is_square()) throw DimensionMismatch("theta must be square");
  if (q.size() != n) throw DimensionMismatch("q length differs from theta size");
  if (f2::rank(theta) < n) throw SingularTheta();

  // Reduce theta to the identity; each row op "row r ^= row s" corresponds to
  // CNOT(r, s). Row ops are involutions, so replaying them in reverse on the
  // identity rebuilds theta.
  BitMatrix a = theta;
  GateList ops;
  for (std::size_t c = 0; c < n; ++c) {
    if (!a.get(c, c)) {
      std::size_t r = c + 1;
      while (!a.get(r, c)) ++r;
      a.add_row(c, r);
      ops.push_back(Gate::cnot(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(r)));
    }
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && a.get(r, c)) {
        a.add_row(r, c);
        ops.push_back(Gate::cnot(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)));
      }
  }
  // X gates first: they act on the Z_j images before any CNOT spreads them,
  // so q is exactly the set of flipped qubits.
  GateList gates;
  for (std::size_t j = 0; j < n; ++j)
    if (q.get(j)) gates.push_back(Gate::x(static_cast<std::uint32_t>(j)));
  gates.insert(gates.end(), ops.rbegin(), ops.rend());
  return CnotCircuit(n, std::move(gates));
}

CliffordTableau cnot_to_tableau(const CnotCircuit& c) { return c.tableau(); }

CnotCircuit random_cnot_circuit(std::size_t n, Rng& rng) {
  BitMatrix theta;
  do {
    theta = BitMatrix::random(n, n, rng);
  } while (f2::rank(theta) < n);
  return synthesize_cnot_from_theta(theta, BitVector::random(n, rng));
}

stab::Label evaluate_sample(const CliffordTableau& hypothesis, const LabeledSample& sample) {
  // tr[E C rho C^dagger] = tr[(C^dagger E C) rho]
  const PauliOperator pulled = conjugate_pauli(hypothesis, sample.measurement, Direction::Inverse);
  return stab::measurement_expectation(sample.state, pulled);
}

stab::Label evaluate_sample(const CnotCircuit& hypothesis, const LabeledSample& sample) {
  return evaluate_sample(hypothesis.tableau(), sample);
}

LabeledSample make_sample(const CliffordTableau& c, stab::StabilizerState state, stab::PauliOperator measurement) {
  const auto label = stab::measurement_expectation(apply_circuit_to_state(c, state), measurement);
  return LabeledSample{std::move(state), std::move(measurement), label};
}

}  // namespace cnotpac::cliff
