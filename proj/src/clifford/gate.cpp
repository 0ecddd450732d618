#include "cnotpac/clifford/gate.hpp"

#include "cnotpac/error.hpp"

namespace cnotpac::cliff {

void Gate::validate(std::size_t n) const {
  if (a >= n) throw DimensionMismatch("gate qubit " + std::to_string(a) + " out of range for n = " + std::to_string(n));
  if (kind == GateKind::CNOT) {
    if (b >= n)
      throw DimensionMismatch("gate qubit " + std::to_string(b) + " out of range for n = " + std::to_string(n));
    if (a == b) throw PreconditionViolation("CNOT control and target coincide");
  }
}

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::CNOT: return "CNOT";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::P: return "P";
  }
  return "?";
}

GateKind parse_gate_kind(const std::string& s) {
  if (s == "CNOT" || s == "CX") return GateKind::CNOT;
  if (s == "X") return GateKind::X;
  if (s == "Z") return GateKind::Z;
  if (s == "H") return GateKind::H;
  if (s == "P" || s == "S") return GateKind::P;
  throw ParseError(0, "unknown gate \"" + s + "\"");
}

std::string Gate::to_string() const {
  if (kind == GateKind::CNOT) return "CNOT(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return gate_kind_name(kind) + "(" + std::to_string(a) + ")";
}

}  // namespace cnotpac::cliff
