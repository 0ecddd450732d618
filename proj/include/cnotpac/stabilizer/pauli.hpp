#pragma once

#include <cstddef>
#include <string>

#include "cnotpac/f2/bit_vector.hpp"

namespace cnotpac::stab {

using f2::BitVector;

/// Hermitian n-qubit Pauli, sign * (tensor of letters). Per qubit the pair
/// (x, z) selects I=(0,0), X=(1,0), Z=(0,1), Y=(1,1); the letter for (x, z) is
/// i^{x z} X^x Z^z, so Y = iXZ.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
  PauliOperator(bool negative, BitVector x, BitVector z);

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
  /// Z^v, sign +1.
  static PauliOperator z_power(const BitVector& v);
  /// X^v, sign +1.
  static PauliOperator x_power(const BitVector& v);
  /// Single letter ('I', 'X', 'Y', 'Z') on qubit q.
  static PauliOperator single(std::size_t n, std::size_t q, char letter, bool negative = false);
  /// Parses "+XZI", "-ZZ", "YI" (leading sign optional); character i is qubit i.
  static PauliOperator parse(const std::string& s);
  static PauliOperator random(std::size_t n, Rng& rng);

  std::size_t num_qubits() const noexcept { return x_.size(); }
  bool negative() const noexcept { return negative_; }
  int sign() const noexcept { return negative_ ? -1 : 1; }
  const BitVector& x() const noexcept { return x_; }
  const BitVector& z() const noexcept { return z_; }
  BitVector& x() noexcept { return x_; }
  BitVector& z() noexcept { return z_; }
  void set_negative(bool v) noexcept { negative_ = v; }
  PauliOperator operator-() const {
    PauliOperator p = *this;
    p.negative_ = !negative_;
    return p;
  }

  bool is_identity() const noexcept { return !negative_ && x_.is_zero() && z_.is_zero(); }
  /// Ignores the sign.
  bool is_identity_up_to_sign() const noexcept { return x_.is_zero() && z_.is_zero(); }
  bool is_z_type() const noexcept { return x_.is_zero(); }
  char letter(std::size_t q) const;

  bool operator==(const PauliOperator& o) const = default;
  bool operator<(const PauliOperator& o) const;

  /// "+XZI" form.
  std::string to_string() const;

 private:
  bool negative_ = false;
  BitVector x_, z_;
};

/// Pauli with a phase i^e, used for intermediate products.
struct PhasedPauli {
  unsigned phase = 0;  // exponent of i, mod 4
  BitVector x, z;

  PhasedPauli() = default;
  explicit PhasedPauli(std::size_t n) : x(n), z(n) {}
  explicit PhasedPauli(const PauliOperator& p) : phase(p.negative() ? 2U : 0U), x(p.x()), z(p.z()) {}

  /// this <- this * rhs
  PhasedPauli& operator*=(const PhasedPauli& rhs);
  PhasedPauli& operator*=(const PauliOperator& rhs);
  bool is_real() const noexcept { return (phase & 1U) == 0; }
  /// Throws std::logic_error if the phase is imaginary.
  PauliOperator to_real() const;
};

PhasedPauli operator*(const PauliOperator& a, const PauliOperator& b);

/// Symplectic form: true iff the operators commute.
bool commutes(const PauliOperator& p, const PauliOperator& q);

/// 2n+1 bits: bit 2i = x_i, bit 2i+1 = z_i, final bit = sign (1 for -).
BitVector encode_pauli(const PauliOperator& p);
PauliOperator decode_pauli(const BitVector& bits, std::size_t n);

}  // namespace cnotpac::stab
