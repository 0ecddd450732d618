#include "cnotpac/cli/json_io.hpp"

#include <cstdio>

#include "cnotpac/error.hpp"

namespace cnotpac::io {

using f2::BitMatrix;
using f2::BitVector;
using stab::PauliOperator;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(0, what); }

const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object()) fail(std::string(where) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t get_size(const json& j, const char* key, const char* where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    fail(std::string(where) + "." + key + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

BitVector get_bits(const json& j, const char* key, const char* where, std::size_t n) {
  const json& v = field(j, key, where);
  if (!v.is_string()) fail(std::string(where) + "." + key + ": expected a bit string");
  const auto s = v.get<std::string>();
  if (s.size() != n) fail(std::string(where) + "." + key + ": expected " + std::to_string(n) + " bits");
  try {
    return BitVector::from_string(s);
  } catch (const ParseError& e) {
    fail(std::string(where) + "." + key + ": " + e.what());
  }
}

}  // namespace

json to_json(const PauliOperator& p) {
  return json{{"n", p.num_qubits()}, {"sign", p.negative() ? "-" : "+"}, {"x", p.x().to_string()}, {"z", p.z().to_string()}};
}

PauliOperator pauli_from_json(const json& j) {
  const std::size_t n = get_size(j, "n", "pauli");
  const json& sign = field(j, "sign", "pauli");
  if (!sign.is_string() || (sign != "+" && sign != "-")) fail("pauli.sign: expected \"+\" or \"-\"");
  return PauliOperator(sign == "-", get_bits(j, "x", "pauli", n), get_bits(j, "z", "pauli", n));
}

json to_json(const LabeledSample& s) {
  json gens = json::array();
  for (const auto& g : s.state.generators()) gens.push_back(to_json(g));
  return json{{"state", gens}, {"measurement", to_json(s.measurement)}, {"label", std::string(stab::label_name(s.label))}};
}

LabeledSample sample_from_json(const json& j) {
  const json& st = field(j, "state", "sample");
  if (!st.is_array()) fail("sample.state: expected an array of generators");
  std::vector<PauliOperator> gens;
  for (const auto& g : st) gens.push_back(pauli_from_json(g));
  const json& lab = field(j, "label", "sample");
  if (!lab.is_string()) fail("sample.label: expected \"0\", \"1/2\" or \"1\"");
  try {
    auto meas = pauli_from_json(field(j, "measurement", "sample"));
    return LabeledSample{stab::StabilizerState(std::move(gens)), std::move(meas), stab::parse_label(lab.get<std::string>())};
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(std::string("sample: ") + e.what());
  }
}

json to_json(const SampleSet& s) {
  json arr = json::array();
  for (const auto& smp : s.samples) arr.push_back(to_json(smp));
  return json{{"n", s.n}, {"samples", arr}};
}

SampleSet sample_set_from_json(const json& j) {
  SampleSet out{get_size(j, "n", "sample set"), {}};
  const json& arr = field(j, "samples", "sample set");
  if (!arr.is_array()) fail("sample set.samples: expected an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    try {
      out.add(sample_from_json(arr[i]));
    } catch (const std::exception& e) {
      fail("samples[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

std::vector<double> sample_weights(const json& j) {
  std::vector<double> w;
  for (const auto& smp : field(j, "samples", "sample set")) {
    const auto it = smp.find("weight");
    if (it == smp.end()) {
      w.push_back(1.0);
    } else {
      if (!it->is_number()) fail("sample.weight: expected a number");
      w.push_back(it->get<double>());
    }
  }
  return w;
}

json to_json(const BitMatrix& m) { return m.to_rows(); }

BitMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) fail("matrix: expected " + std::to_string(rows) + " rows");
  std::vector<std::string> rs;
  for (const auto& r : j) {
    if (!r.is_string() || r.get<std::string>().size() != cols)
      fail("matrix: every row must be a string of " + std::to_string(cols) + " bits");
    rs.push_back(r.get<std::string>());
  }
  try {
    return rows == 0 ? BitMatrix(0, cols) : BitMatrix::from_rows(rs);
  } catch (const std::exception& e) {
    fail(std::string("matrix: ") + e.what());
  }
}

json to_json(const red::NonSingularityInstance& inst) {
  json ms = json::array();
  for (const auto& m : inst.ms) ms.push_back(to_json(m));
  return json{{"size", inst.size}, {"m0", to_json(inst.m0)}, {"ms", ms}};
}

red::NonSingularityInstance instance_from_json(const json& j) {
  red::NonSingularityInstance inst;
  inst.size = get_size(j, "size", "instance");
  inst.m0 = matrix_from_json(field(j, "m0", "instance"), inst.size, inst.size);
  const json& ms = field(j, "ms", "instance");
  if (!ms.is_array()) fail("instance.ms: expected an array of matrices");
  for (const auto& m : ms) inst.ms.push_back(matrix_from_json(m, inst.size, inst.size));
  return inst;
}

cliff::CliffordTableau CircuitDoc::hypothesis() const {
  return tableau ? *tableau : cliff::CliffordTableau::from_gates(n, gates);
}

json to_json(const cliff::CliffordTableau& t) {
  return json{{"matrix", to_json(t.matrix())}, {"phases", t.phases().to_string()}};
}

json to_json(const cliff::GateList& gates, std::size_t n, const cliff::CliffordTableau* tableau) {
  json arr = json::array();
  for (const auto& g : gates) {
    if (g.kind == cliff::GateKind::CNOT)
      arr.push_back(json{{"op", "CNOT"}, {"control", g.a}, {"target", g.b}});
    else
      arr.push_back(json{{"op", cliff::gate_kind_name(g.kind)}, {"qubit", g.a}});
  }
  json out{{"n", n}, {"gates", arr}};
  if (tableau) out["tableau"] = to_json(*tableau);
  return out;
}

json to_json(const cliff::CnotCircuit& c, bool with_tableau) {
  if (!with_tableau) return to_json(c.gates(), c.num_qubits());
  const auto t = c.tableau();
  return to_json(c.gates(), c.num_qubits(), &t);
}

CircuitDoc circuit_from_json(const json& j) {
  CircuitDoc doc;
  doc.n = get_size(j, "n", "circuit");
  const json& gates = field(j, "gates", "circuit");
  if (!gates.is_array()) fail("circuit.gates: expected an array");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const json& g = gates[i];
    const std::string where = "gates[" + std::to_string(i) + "]";
    try {
      const json& op = field(g, "op", where.c_str());
      if (!op.is_string()) fail(where + ".op: expected a gate name");
      const auto kind = cliff::parse_gate_kind(op.get<std::string>());
      cliff::Gate gate{kind};
      if (kind == cliff::GateKind::CNOT) {
        gate.a = static_cast<std::uint32_t>(get_size(g, "control", where.c_str()));
        gate.b = static_cast<std::uint32_t>(get_size(g, "target", where.c_str()));
      } else {
        gate.a = static_cast<std::uint32_t>(get_size(g, "qubit", where.c_str()));
      }
      gate.validate(doc.n);
      doc.gates.push_back(gate);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(where + ": " + e.what());
    }
  }
  if (const auto it = j.find("tableau"); it != j.end()) {
    const BitMatrix s = matrix_from_json(field(*it, "matrix", "tableau"), 2 * doc.n, 2 * doc.n);
    const BitVector ph = get_bits(*it, "phases", "tableau", 2 * doc.n);
    if (!cliff::is_symplectic(s, doc.n))
      fail("tableau.matrix is not symplectic: S^T Lambda S != Lambda, so it does not preserve Pauli commutation");
    doc.tableau = cliff::CliffordTableau(s, ph);
    if (!(*doc.tableau == cliff::CliffordTableau::from_gates(doc.n, doc.gates)))
      fail("tableau does not match the gate list");
  }
  return doc;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cnotpac::io
