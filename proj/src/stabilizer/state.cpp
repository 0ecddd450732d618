#include "cnotpac/stabilizer/state.hpp"

#include <stdexcept>

#include "cnotpac/error.hpp"
#include "cnotpac/f2/bit_matrix.hpp"

namespace cnotpac::stab {

namespace {

BitVector stacked(const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  BitVector v(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.x().get(i)) v.set(i);
    if (p.z().get(i)) v.set(n + i);
  }
  return v;
}

}  // namespace

StabilizerGroup::StabilizerGroup(std::vector<PauliOperator> generators) : gens_(std::move(generators)) {
  n_ = gens_.empty() ? 0 : gens_.front().num_qubits();
  if (gens_.size() != n_)
    throw PreconditionViolation("a pure stabilizer group needs exactly n generators, got " +
                                std::to_string(gens_.size()) + " for n = " + std::to_string(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (gens_[i].num_qubits() != n_) throw DimensionMismatch("generator qubit counts differ");
    for (std::size_t j = 0; j < i; ++j)
      if (!commutes(gens_[i], gens_[j]))
        throw PreconditionViolation("generators " + std::to_string(j) + " and " + std::to_string(i) +
                                    " anticommute");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    BitVector row = stacked(gens_[i]);
    BitVector tag = BitVector::unit(n_, i);
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (row.get(pivots_[k])) {
        row ^= rows_[k];
        tag ^= tags_[k];
      }
    if (row.is_zero()) throw PreconditionViolation("generator " + std::to_string(i) + " is dependent on earlier ones");
    const std::size_t p = row.first_one();
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (rows_[k].get(p)) {
        rows_[k] ^= row;
        tags_[k] ^= tag;
      }
    rows_.push_back(std::move(row));
    tags_.push_back(std::move(tag));
    pivots_.push_back(p);
  }
}

BitVector StabilizerGroup::combination(const PauliOperator& p) const {
  if (p.num_qubits() != n_) throw DimensionMismatch("Pauli and group qubit counts differ");
  BitVector row = stacked(p);
  BitVector tag(n_);
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (row.get(pivots_[k])) {
      row ^= rows_[k];
      tag ^= tags_[k];
    }
  if (!row.is_zero()) return {};
  return tag;
}

Membership StabilizerGroup::contains(const PauliOperator& p) const {
  const BitVector tag = combination(p);
  if (tag.size() != n_) return Membership::Absent;
  // Left-to-right product of the selected generators. Intermediate phases may
  // be imaginary; the full product of commuting Hermitian Paulis is not.
  PhasedPauli acc(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (tag.get(i)) acc *= gens_[i];
  const PauliOperator g = acc.to_real();
  return g.negative() == p.negative() ? Membership::Plus : Membership::Minus;
}

Membership group_contains(const StabilizerGroup& g, const PauliOperator& p) { return g.contains(p); }

std::vector<PauliOperator> z_type_generators(const StabilizerGroup& g) {
  const std::size_t n = g.num_qubits();
  // Generator subsets whose X parts cancel.
  f2::BitMatrix xs(n, n);
  for (std::size_t j = 0; j < n; ++j) xs.set_column(j, g.generators()[j].x());
  std::vector<PauliOperator> out;
  for (const auto& c : f2::null_space(xs)) {
    PhasedPauli acc(n);
    for (std::size_t j = 0; j < n; ++j)
      if (c.get(j)) acc *= g.generators()[j];
    out.push_back(acc.to_real());
  }
  return out;
}

StabilizerState StabilizerState::basis(const BitVector& b) {
  std::vector<PauliOperator> gens;
  for (std::size_t i = 0; i < b.size(); ++i) gens.push_back(PauliOperator::single(b.size(), i, 'Z', b.get(i)));
  return StabilizerState(std::move(gens));
}

std::string_view label_name(Label l) {
  switch (l) {
    case Label::Zero: return "0";
    case Label::Half: return "1/2";
    case Label::One: return "1";
  }
  return "?";
}

Label parse_label(std::string_view s) {
  if (s == "0") return Label::Zero;
  if (s == "1/2") return Label::Half;
  if (s == "1") return Label::One;
  throw ParseError(0, "label must be \"0\", \"1/2\" or \"1\", got \"" + std::string(s) + "\"");
}

double label_value(Label l) {
  switch (l) {
    case Label::Zero: return 0.0;
    case Label::Half: return 0.5;
    case Label::One: return 1.0;
  }
  return -1.0;
}

Label measurement_expectation(const StabilizerState& rho, const PauliOperator& p) {
  if (p.num_qubits() != rho.num_qubits()) throw DimensionMismatch("state and measurement qubit counts differ");
  if (p.is_identity_up_to_sign()) throw PreconditionViolation("measurement Pauli must not be the identity");
  switch (rho.group().contains(p)) {
    case Membership::Plus: return Label::One;
    case Membership::Minus: return Label::Zero;
    case Membership::Absent: return Label::Half;
  }
  return Label::Half;
}

}  // namespace cnotpac::stab
