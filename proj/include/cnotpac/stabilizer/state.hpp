#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cnotpac/stabilizer/pauli.hpp"

namespace cnotpac::stab {

enum class Membership { Plus, Minus, Absent };

/// Pure-state stabilizer group given by exactly n commuting, independent
/// generators. Construction validates; the object is immutable afterwards.
class StabilizerGroup {
 public:
  explicit StabilizerGroup(std::vector<PauliOperator> generators);

  std::size_t num_qubits() const noexcept { return n_; }
  const std::vector<PauliOperator>& generators() const noexcept { return gens_; }

  /// Plus if p is in the group with its sign, Minus if -p is, Absent otherwise.
  Membership contains(const PauliOperator& p) const;
  /// Generator subset (bit i = generator i) whose product has p's letters,
  /// or an empty vector when p's letters are not in the group.
  BitVector combination(const PauliOperator& p) const;

  bool operator==(const StabilizerGroup& o) const { return gens_ == o.gens_; }

 private:
  std::size_t n_;
  std::vector<PauliOperator> gens_;
  // Echelon form of the 2n-bit generator rows, each with the subset of
  // generators that produced it.
  std::vector<BitVector> rows_, tags_;
  std::vector<std::size_t> pivots_;
};

Membership group_contains(const StabilizerGroup& g, const PauliOperator& p);

/// Independent generators (with signs) of the Z-type elements of the group.
std::vector<PauliOperator> z_type_generators(const StabilizerGroup& g);

/// rho = 2^{-n} sum over the group.
class StabilizerState {
 public:
  explicit StabilizerState(StabilizerGroup group) : group_(std::move(group)) {}
  explicit StabilizerState(std::vector<PauliOperator> generators) : group_(std::move(generators)) {}

  /// |b>, stabilized by (-1)^{b_i} Z_i.
  static StabilizerState basis(const BitVector& b);
  static StabilizerState zero(std::size_t n) { return basis(BitVector(n)); }

  std::size_t num_qubits() const noexcept { return group_.num_qubits(); }
  const StabilizerGroup& group() const noexcept { return group_; }
  const std::vector<PauliOperator>& generators() const noexcept { return group_.generators(); }

  bool operator==(const StabilizerState& o) const { return group_ == o.group_; }

 private:
  StabilizerGroup group_;
};

/// tr[(I+P)/2 rho] for a stabilizer state; only these three values occur.
enum class Label { Zero, Half, One };

std::string_view label_name(Label l);  // "0", "1/2", "1"
Label parse_label(std::string_view s);
double label_value(Label l);

/// Throws PreconditionViolation when p is +-identity.
Label measurement_expectation(const StabilizerState& rho, const PauliOperator& p);

/// Independent check that builds 2^n x 2^n complex matrices. n <= 10.
double dense_expectation_oracle(const StabilizerState& rho, const PauliOperator& p);

}  // namespace cnotpac::stab
