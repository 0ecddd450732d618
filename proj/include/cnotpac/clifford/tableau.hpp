#pragma once

#include <cstddef>

#include "cnotpac/clifford/gate.hpp"
#include "cnotpac/f2/bit_matrix.hpp"
#include "cnotpac/stabilizer/state.hpp"

namespace cnotpac::cliff {

using f2::BitMatrix;
using f2::BitVector;
using stab::PauliOperator;
using stab::StabilizerState;

enum class Direction {
  Forward,  // C P C^dagger
  Inverse   // C^dagger P C
};

/// Clifford unitary C as the images of the generators under P -> C P C^dagger.
///
/// S is 2n x 2n. Column 2j holds the image of X_j and column 2j+1 the image
/// of Z_j; within a column, row 2i is the x bit and row 2i+1 the z bit of
/// qubit i. phases[2j] / phases[2j+1] are the signs (1 = negative) of those
/// images. Gates listed first act first.
class CliffordTableau {
 public:
  CliffordTableau() = default;
  /// Identity circuit.
  explicit CliffordTableau(std::size_t n);
  /// Throws PreconditionViolation unless S is symplectic.
  CliffordTableau(BitMatrix s, BitVector phases);

  static CliffordTableau from_gates(std::size_t n, const GateList& gates);

  std::size_t num_qubits() const noexcept { return n_; }
  const BitMatrix& matrix() const noexcept { return s_; }
  const BitVector& phases() const noexcept { return phases_; }

  /// Image of X_j (z_image = false) or Z_j (z_image = true).
  PauliOperator image(std::size_t j, bool z_image) const;

  /// Blocks of the generator images: alpha = X-part of X images, beta =
  /// Z-part of X images, gamma = X-part of Z images, theta = Z-part of Z
  /// images. Entry (i, j) refers to qubit i of the image of generator j.
  BitMatrix alpha_block() const;
  BitMatrix beta_block() const;
  BitMatrix gamma_block() const;
  BitMatrix theta_block() const;
  BitVector p_signs() const;
  BitVector q_signs() const;

  /// In place: this becomes the tableau of (this circuit followed by g).
  void apply(const Gate& g);

  bool operator==(const CliffordTableau& o) const = default;

 private:
  std::size_t n_ = 0;
  BitMatrix s_;
  BitVector phases_;
};

/// Lambda(n): block-diagonal [[0,1],[1,0]].
BitMatrix lambda(std::size_t n);

/// S^T Lambda S == Lambda. Throws DimensionMismatch for a wrong shape.
bool is_symplectic(const BitMatrix& s, std::size_t n);

CliffordTableau apply_gate(const CliffordTableau& t, const Gate& g);

PauliOperator conjugate_pauli(const CliffordTableau& t, const PauliOperator& p, Direction dir);

/// Tableau of "first, then second".
CliffordTableau compose(const CliffordTableau& first, const CliffordTableau& second);

CliffordTableau inverse(const CliffordTableau& t);

/// C rho C^dagger.
StabilizerState apply_circuit_to_state(const CliffordTableau& t, const StabilizerState& rho);

/// Tableau of a uniformly random sequence of `length` gates over {H, P, CNOT}.
CliffordTableau random_clifford(std::size_t n, std::size_t length, Rng& rng);
GateList random_gate_sequence(std::size_t n, std::size_t length, Rng& rng);

/// Stabilizer state obtained by a random H/P/CNOT circuit applied to |0...0>.
StabilizerState random_stabilizer_state(std::size_t n, Rng& rng);

}  // namespace cnotpac::cliff
