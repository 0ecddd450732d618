#pragma once

#include <cstddef>

#include "cnotpac/clifford/sample.hpp"
#include "cnotpac/clifford/tableau.hpp"

namespace cnotpac::cliff {

/// Circuit over {X, CNOT}. In tableau terms gamma = 0, beta = 0, p = 0,
/// alpha = theta^{-T}, and the Z images are C Z^b C^dagger = (-1)^{q.b} Z^{theta b}.
///
/// Appending CNOT(c, t) adds row t of theta into row c: the Z image of the
/// target picks up Z_c. The pullback G = theta^{-1} describes the other
/// direction, C^dagger Z^b C = (-1)^{qt.b} Z^{G b} with qt = theta^{-T} q; the
/// sample gadgets constrain G.
class CnotCircuit {
 public:
  /// Throws PreconditionViolation for gates other than X and CNOT.
  CnotCircuit(std::size_t n, GateList gates);

  /// The unique circuit (up to gate list) with pullback G and pullback signs qt.
  static CnotCircuit from_pullback(const BitMatrix& g, const BitVector& qt);

  std::size_t num_qubits() const noexcept { return n_; }
  const GateList& gates() const noexcept { return gates_; }
  const BitMatrix& theta() const noexcept { return theta_; }
  const BitVector& q() const noexcept { return q_; }
  BitMatrix pullback() const;
  BitVector pullback_signs() const;

  CliffordTableau tableau() const { return CliffordTableau::from_gates(n_, gates_); }

 private:
  std::size_t n_;
  GateList gates_;
  BitMatrix theta_;
  BitVector q_;
};

/// X gates on the qubits with q_j = 1, then CNOTs from Gauss-Jordan
/// elimination of theta. At most n^2 + n gates. Throws SingularTheta.
CnotCircuit synthesize_cnot_from_theta(const BitMatrix& theta, const BitVector& q);

CliffordTableau cnot_to_tableau(const CnotCircuit& c);

/// Uniform over GL(n, 2) x GF(2)^n, via rejection.
CnotCircuit random_cnot_circuit(std::size_t n, Rng& rng);

/// Label the hypothesis assigns to the sample's (state, measurement).
stab::Label evaluate_sample(const CliffordTableau& hypothesis, const LabeledSample& sample);
stab::Label evaluate_sample(const CnotCircuit& hypothesis, const LabeledSample& sample);

/// Labels every (state, measurement) pair with the circuit's expectation.
LabeledSample make_sample(const CliffordTableau& c, stab::StabilizerState state, stab::PauliOperator measurement);

}  // namespace cnotpac::cliff
