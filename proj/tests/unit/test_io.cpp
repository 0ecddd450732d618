#include "doctest.h"

#include "cnotpac/cli/dimacs.hpp"
#include "cnotpac/cli/json_io.hpp"
#include "cnotpac/error.hpp"
#include "cnotpac/reduction/gadgets.hpp"

using namespace cnotpac;
using namespace cnotpac::io;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("json round trips") {
    Rng rng(41);
    for (int rep = 0; rep < 50; ++rep) {
      const std::size_t n = 1 + rep % 6;
      const auto p = stab::PauliOperator::random(n, rng);
      CHECK(pauli_from_json(parse_json_text(to_json(p).dump())) == p);

      SampleSet s{n, {}};
      for (int i = 0; i < 3; ++i)
        s.add({cliff::random_stabilizer_state(n, rng), stab::PauliOperator::random(n, rng),
               static_cast<stab::Label>(uniform_below(rng, 3))});
      CHECK(sample_set_from_json(parse_json_text(to_json(s).dump())) == s);

      const auto c = cliff::random_cnot_circuit(n, rng);
      const auto doc = circuit_from_json(to_json(c));
      CHECK(doc.gates == c.gates());
      CHECK(doc.hypothesis() == c.tableau());

      const auto gates = cliff::random_gate_sequence(n, 10, rng);
      CHECK(circuit_from_json(to_json(gates, n)).gates == gates);
    }
    const auto r = red::reduce_formula_to_samples(red::parse_formula("x1*(x2+x3)+x3*x4"), rng);
    CHECK(instance_from_json(parse_json_text(to_json(r.instance).dump())) == r.instance);
  }

  TEST_CASE("json schema errors") {
    CHECK_THROWS_AS(pauli_from_json(json{{"n", 2}, {"sign", "+"}, {"x", "0"}, {"z", "00"}}), ParseError);
    CHECK_THROWS_AS(pauli_from_json(json{{"n", 2}, {"sign", "?"}, {"x", "00"}, {"z", "00"}}), ParseError);
    CHECK_THROWS_AS(pauli_from_json(json{{"n", 1}, {"sign", "+"}, {"x", "2"}, {"z", "0"}}), ParseError);
    CHECK_THROWS_AS(parse_json_text("{"), ParseError);
    const json bad_label{{"n", 1},
                         {"samples", json::array({json{{"state", json::array({to_json(stab::PauliOperator::parse("+Z"))})},
                                                       {"measurement", to_json(stab::PauliOperator::parse("+Z"))},
                                                       {"label", "0.5"}}})}};
    CHECK_THROWS_AS(sample_set_from_json(bad_label), ParseError);
    // X_0 -> X_0 X_1 alone breaks commutation with Z_1
    json c{{"n", 2}, {"gates", json::array()}, {"tableau", {{"matrix", {"1000", "0100", "1010", "0001"}}, {"phases", "0000"}}}};
    CHECK_THROWS_WITH_AS(circuit_from_json(c), doctest::Contains("symplectic"), ParseError);
    json g{{"n", 2}, {"gates", json::array({json{{"op", "CNOT"}, {"control", 0}, {"target", 0}}})}};
    CHECK_THROWS_AS(circuit_from_json(g), ParseError);
    json h{{"n", 1}, {"gates", json::array({json{{"op", "H"}, {"qubit", 0}}})},
           {"tableau", {{"matrix", {"10", "01"}}, {"phases", "00"}}}};
    CHECK_THROWS_WITH_AS(circuit_from_json(h), doctest::Contains("does not match"), ParseError);
  }

  TEST_CASE("fnv1a") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  }

  TEST_CASE("dimacs") {
    const auto f = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n2 3\n-1 0\n");
    CHECK(f.num_vars == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::vector<int>{1, -2});
    CHECK(f.clauses[1] == std::vector<int>{2, 3, -1});
    CHECK(parse_dimacs("p cnf 1 1\n1\n").clauses.size() == 1);
    CHECK(parse_dimacs("p cnf 1 1\n1 0\n%\n0\n").clauses.size() == 1);

    CHECK(error_line("p cnf x 1\n1 0\n") == 1);
    CHECK(error_line("p cnf 1\n1 0\n") == 1);
    CHECK(error_line("1 0\n") == 1);
    CHECK(error_line("c\np cnf 4 1\n1 2 3 4 0\n") == 3);
    CHECK(error_line("p cnf 1 2\n1 0\n0\n") == 3);
    CHECK(error_line("p cnf 1 1\n2 0\n") == 2);
    CHECK(error_line("p cnf 1 2\n1 0\n") == 1);
    CHECK(error_line("p cnf 1 1\n1 a 0\n") == 2);
  }
}
