#pragma once

// JSON forms of the library types. Bit strings list coordinate 0 first;
// matrices are arrays of row strings; labels are the strings "0", "1/2", "1".
// Every parser throws ParseError naming the offending field.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cnotpac/clifford/cnot.hpp"
#include "cnotpac/reduction/graph.hpp"

namespace cnotpac::io {

using json = nlohmann::ordered_json;

json to_json(const stab::PauliOperator& p);
stab::PauliOperator pauli_from_json(const json& j);

json to_json(const LabeledSample& s);
LabeledSample sample_from_json(const json& j);

/// {"n": .., "samples": [..]}. Sample objects may carry a "weight", which
/// this parser ignores (see sample_weights).
json to_json(const SampleSet& s);
SampleSet sample_set_from_json(const json& j);
/// Per-sample "weight" fields, defaulting to 1.
std::vector<double> sample_weights(const json& j);

json to_json(const f2::BitMatrix& m);
f2::BitMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json to_json(const red::NonSingularityInstance& inst);
red::NonSingularityInstance instance_from_json(const json& j);

/// Circuit file: a gate list, optionally with the tableau it produces.
struct CircuitDoc {
  std::size_t n = 0;
  cliff::GateList gates;
  std::optional<cliff::CliffordTableau> tableau;

  /// The tableau block when present, otherwise the gate list's tableau.
  cliff::CliffordTableau hypothesis() const;
};
json to_json(const cliff::GateList& gates, std::size_t n, const cliff::CliffordTableau* tableau = nullptr);
json to_json(const cliff::CnotCircuit& c, bool with_tableau = true);
json to_json(const cliff::CliffordTableau& t);
/// Rejects a tableau that is not symplectic or disagrees with the gate list.
CircuitDoc circuit_from_json(const json& j);

/// Parses text, mapping syntax errors to ParseError.
json parse_json_text(std::string_view text);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace cnotpac::io
