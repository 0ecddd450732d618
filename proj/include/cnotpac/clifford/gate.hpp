#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cnotpac::cliff {

enum class GateKind : std::uint8_t { CNOT, X, Z, H, P };

/// Qubit indices are 0-based. For single-qubit gates only `a` is used; for
/// CNOT `a` is the control and `b` the target.
struct Gate {
  GateKind kind;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  static Gate cnot(std::uint32_t control, std::uint32_t target) { return {GateKind::CNOT, control, target}; }
  static Gate x(std::uint32_t q) { return {GateKind::X, q, 0}; }
  static Gate z(std::uint32_t q) { return {GateKind::Z, q, 0}; }
  static Gate h(std::uint32_t q) { return {GateKind::H, q, 0}; }
  static Gate p(std::uint32_t q) { return {GateKind::P, q, 0}; }

  /// Throws DimensionMismatch / PreconditionViolation for bad indices.
  void validate(std::size_t n) const;

  bool operator==(const Gate&) const = default;
  std::string to_string() const;
};

std::string gate_kind_name(GateKind k);
GateKind parse_gate_kind(const std::string& s);

using GateList = std::vector<Gate>;

}  // namespace cnotpac::cliff
