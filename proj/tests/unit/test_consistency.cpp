#include "doctest.h"
#include "oracles.hpp"

#include "cnotpac/consistency/search.hpp"
#include "cnotpac/error.hpp"

using namespace cnotpac;
using namespace cnotpac::cons;
using stab::Label;
using stab::PauliOperator;
using stab::StabilizerState;

namespace {

PauliOperator nonidentity(std::size_t n, Rng& rng) {
  for (;;) {
    auto p = PauliOperator::random(n, rng);
    if (!p.is_identity_up_to_sign()) return p;
  }
}

SampleSet labelled_by(const CnotCircuit& c, std::size_t m, Rng& rng) {
  SampleSet s{c.num_qubits(), {}};
  const auto t = c.tableau();
  for (std::size_t i = 0; i < m; ++i)
    s.add(cliff::make_sample(t, cliff::random_stabilizer_state(c.num_qubits(), rng), nonidentity(c.num_qubits(), rng)));
  return s;
}

SampleSet random_labels(std::size_t n, std::size_t m, Rng& rng) {
  SampleSet s{n, {}};
  const Label ls[] = {Label::Zero, Label::Half, Label::One};
  for (std::size_t i = 0; i < m; ++i)
    s.add({cliff::random_stabilizer_state(n, rng), nonidentity(n, rng), ls[uniform_below(rng, 3)]});
  return s;
}

// Naive existence check: every (G, qt) through the general tableau evaluator.
bool naive_exists(const SampleSet& s) {
  bool found = false;
  oracle::for_each_gl(s.n, [&](const BitMatrix& g) {
    for (std::uint64_t q = 0; !found && q < (1U << s.n); ++q)
      found = check_consistent(CnotCircuit::from_pullback(g, BitVector::from_uint(s.n, q)), s);
  });
  return found;
}

bool same_stats(const SearchStats& a, const SearchStats& b) {
  return a.nodes == b.nodes && a.full_rank == b.full_rank && a.examined == b.examined && a.pruned == b.pruned;
}

}  // namespace

TEST_SUITE("consistency") {
  TEST_CASE("empty sample set gives the identity first") {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto r = brute_force_search(SampleSet{n, {}});
      REQUIRE(r.outcome == SearchOutcome::Found);
      CHECK(r.circuit->pullback() == BitMatrix::identity(n));
      CHECK(r.circuit->pullback_signs().is_zero());
      CHECK(r.stats.full_rank == 1);
    }
  }

  TEST_CASE("brute force recovers a consistent circuit") {
    Rng rng(11);
    for (std::size_t n = 1; n <= 4; ++n)
      for (int rep = 0; rep < 5; ++rep) {
        const auto truth = cliff::random_cnot_circuit(n, rng);
        const auto s = labelled_by(truth, 3 * n * n, rng);
        const auto r = brute_force_search(s);
        REQUIRE(r.outcome == SearchOutcome::Found);
        CHECK(check_consistent(*r.circuit, s));
      }
  }

  TEST_CASE("brute force agrees with the naive enumeration") {
    Rng rng(12);
    int found = 0, none = 0;
    for (std::size_t n = 1; n <= 3; ++n)
      for (int rep = 0; rep < 40; ++rep) {
        const auto s = random_labels(n, 1 + uniform_below(rng, 3), rng);
        const bool naive = naive_exists(s);
        const auto r = brute_force_search(s);
        CHECK((r.outcome == SearchOutcome::Found) == naive);
        if (naive) {
          ++found;
          CHECK(check_consistent(*r.circuit, s));
        } else {
          ++none;
        }
      }
    CHECK(found > 10);
    CHECK(none > 10);
  }

  TEST_CASE("result and stats do not depend on the worker count") {
    Rng rng(13);
    for (int rep = 0; rep < 6; ++rep) {
      const auto s = rep % 2 ? labelled_by(cliff::random_cnot_circuit(4, rng), 10, rng) : random_labels(4, 4, rng);
      const auto one = brute_force_search(s, {1, 5});
      for (std::size_t w : {2, 3, 8}) {
        const auto many = brute_force_search(s, {w, 5});
        CHECK(many.outcome == one.outcome);
        CHECK(same_stats(many.stats, one.stats));
        if (one.circuit) CHECK(many.circuit->pullback() == one.circuit->pullback());
      }
    }
  }

  TEST_CASE("enumeration limit") {
    CHECK_THROWS_AS(brute_force_search(SampleSet{6, {}}), EnumerationLimit);
    CHECK_NOTHROW(brute_force_search(SampleSet{6, {}}, {1, 6}));
  }

  TEST_CASE("check_consistent rejects non-CNOT shapes and finds violations") {
    Rng rng(14);
    const auto truth = cliff::random_cnot_circuit(3, rng);
    auto s = labelled_by(truth, 12, rng);
    CHECK(check_consistent(truth, s));
    CHECK_FALSE(first_violation(truth.tableau(), s).has_value());
    auto& last = s.samples.back();
    last.label = last.label == Label::One ? Label::Zero : Label::One;
    CHECK(first_violation(truth.tableau(), s) == s.size() - 1);
    CHECK_THROWS_AS(first_violation(cliff::CliffordTableau(2), s), DimensionMismatch);
  }

  TEST_CASE("decision to search") {
    Rng rng(15);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto s = labelled_by(cliff::random_cnot_circuit(n, rng), 2 * n, rng);
      const auto r = search_from_decision(brute_force_decider(), s);
      REQUIRE(r.outcome == SearchOutcome::Found);
      CHECK(check_consistent(*r.circuit, s));
      CHECK(r.stats.oracle_calls == 1 + n * (n + 1));
    }
    const auto s = labelled_by(cliff::random_cnot_circuit(3, rng), 6, rng);
    CHECK(search_from_decision([](const SampleSet&) { return false; }, s).outcome == SearchOutcome::NoneExists);
    // Always yes: every first guess is kept, giving G = 0.
    CHECK(search_from_decision([](const SampleSet&) { return true; }, s).outcome == SearchOutcome::OracleFault);
  }

  TEST_CASE("decision to search on an unsatisfiable set") {
    Rng rng(16);
    SampleSet s{2, {}};
    const auto z0 = PauliOperator::parse("+ZI");
    s.add({StabilizerState::zero(2), z0, Label::One});
    s.add({StabilizerState::zero(2), z0, Label::Zero});
    CHECK(brute_force_search(s).outcome == SearchOutcome::NoneExists);
    CHECK(search_from_decision(brute_force_decider(), s).outcome == SearchOutcome::NoneExists);
  }
}
