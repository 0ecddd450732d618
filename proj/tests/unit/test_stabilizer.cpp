#include "doctest.h"
#include "oracles.hpp"

#include "cnotpac/clifford/tableau.hpp"
#include "cnotpac/error.hpp"
#include "cnotpac/stabilizer/state.hpp"

using namespace cnotpac;
using namespace cnotpac::stab;
using f2::BitVector;

namespace {
PauliOperator P(const char* s) { return PauliOperator::parse(s); }
StabilizerState state(std::initializer_list<const char*> gens) {
  std::vector<PauliOperator> g;
  for (auto s : gens) g.push_back(P(s));
  return StabilizerState(g);
}
}  // namespace

TEST_SUITE("stabilizer") {
  TEST_CASE("commutes") {
    CHECK_FALSE(commutes(P("X"), P("Z")));
    CHECK(commutes(P("XI"), P("IZ")));
    CHECK(commutes(P("XX"), P("ZZ")));
    CHECK(commutes(P("-Y"), P("Y")));
    CHECK_THROWS_AS(commutes(P("X"), P("XX")), DimensionMismatch);
    // dense cross-check of X(x)X against Z(x)Z
    const auto a = oracle::pauli_matrix(P("XX")), b = oracle::pauli_matrix(P("ZZ"));
    CHECK((a * b).approx(b * a));
  }

  TEST_CASE("commutes agrees with dense matrices") {
    Rng rng(31);
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = 1 + uniform_below(rng, 3);
      const auto p = PauliOperator::random(n, rng), q = PauliOperator::random(n, rng);
      const auto a = oracle::pauli_matrix(p), b = oracle::pauli_matrix(q);
      CHECK(commutes(p, q) == (a * b).approx(b * a));
    }
  }

  TEST_CASE("products carry the exact phase") {
    Rng rng(32);
    const oracle::cd I(0, 1);
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = 1 + uniform_below(rng, 3);
      const auto p = PauliOperator::random(n, rng), q = PauliOperator::random(n, rng);
      const PhasedPauli r = p * q;
      auto expect = oracle::pauli_matrix(PauliOperator(false, r.x, r.z));
      oracle::cd ph = 1;
      for (unsigned k = 0; k < r.phase; ++k) ph *= I;
      for (auto& v : expect.a) v *= ph;
      CHECK((oracle::pauli_matrix(p) * oracle::pauli_matrix(q)).approx(expect));
    }
  }

  TEST_CASE("z_power and x_power") {
    CHECK(PauliOperator::z_power(BitVector(3)).is_identity());
    CHECK(PauliOperator::z_power(BitVector::unit(2, 0)) == P("ZI"));
    CHECK(PauliOperator::z_power(BitVector::from_string("11")) == P("ZZ"));
    CHECK(PauliOperator::x_power(BitVector::from_string("101")) == P("XIX"));
    Rng rng(33);
    for (int t = 0; t < 200; ++t) {
      const auto v = BitVector::random(5, rng), w = BitVector::random(5, rng);
      const auto prod = (PauliOperator::z_power(v) * PauliOperator::z_power(w)).to_real();
      CHECK(prod == PauliOperator::z_power(v ^ w));
      if (v != w) CHECK(PauliOperator::z_power(v) != PauliOperator::z_power(w));
    }
  }

  TEST_CASE("encode and decode") {
    CHECK(encode_pauli(PauliOperator::identity(2)) == BitVector(5));
    CHECK(encode_pauli(P("-Z")) == BitVector::from_string("011"));
    CHECK(encode_pauli(P("+X")).to_string() == "100");
    CHECK(encode_pauli(P("+Y")).to_string() == "110");
    Rng rng(34);
    for (int t = 0; t < 1000; ++t) {
      const auto p = PauliOperator::random(1 + uniform_below(rng, 8), rng);
      CHECK(decode_pauli(encode_pauli(p), p.num_qubits()) == p);
    }
    CHECK_THROWS_AS(decode_pauli(BitVector(4), 2), DimensionMismatch);
  }

  TEST_CASE("group construction validates") {
    CHECK_THROWS_AS(state({"XI", "ZI"}), PreconditionViolation);   // anticommute
    CHECK_THROWS_AS(state({"ZI", "-ZI"}), PreconditionViolation);  // dependent
    CHECK_THROWS_AS(state({"ZI"}), PreconditionViolation);         // too few
    CHECK_NOTHROW(state({"XX", "ZZ"}));
  }

  TEST_CASE("group_contains") {
    const auto zero = StabilizerState::zero(3);
    CHECK(group_contains(zero.group(), P("ZII")) == Membership::Plus);
    CHECK(group_contains(zero.group(), P("-ZII")) == Membership::Minus);
    CHECK(group_contains(zero.group(), P("XII")) == Membership::Absent);
    CHECK(group_contains(zero.group(), P("ZZZ")) == Membership::Plus);
    // Bell state: XX * ZZ = -YY
    const auto bell = state({"XX", "ZZ"});
    CHECK(group_contains(bell.group(), P("-YY")) == Membership::Plus);
    CHECK(group_contains(bell.group(), P("YY")) == Membership::Minus);
  }

  TEST_CASE("measurement_expectation values") {
    CHECK(measurement_expectation(state({"Z"}), P("Z")) == Label::One);
    CHECK(measurement_expectation(state({"-Z"}), P("Z")) == Label::Zero);
    CHECK(measurement_expectation(state({"Z"}), P("X")) == Label::Half);
    CHECK_THROWS_AS(measurement_expectation(state({"Z"}), P("I")), PreconditionViolation);
    CHECK_THROWS_AS(measurement_expectation(state({"Z"}), P("-I")), PreconditionViolation);
    CHECK(label_name(parse_label("1/2")) == "1/2");
    CHECK_THROWS_AS(parse_label("0.5"), ParseError);
  }

  TEST_CASE("dense oracle") {
    CHECK(dense_expectation_oracle(state({"Z"}), P("Z")) == 1.0);
    CHECK(dense_expectation_oracle(state({"X"}), P("Z")) == 0.5);
    CHECK(dense_expectation_oracle(state({"-Z"}), P("Z")) == 0.0);
    CHECK(dense_expectation_oracle(state({"XX", "ZZ"}), P("-YY")) == 1.0);
    CHECK_THROWS_AS(dense_expectation_oracle(StabilizerState::zero(11), P("ZIIIIIIIIII")), PreconditionViolation);
  }

  TEST_CASE("oracle equivalence: exhaustive at n <= 3, random up to n = 6") {
    Rng rng(35);
    for (std::size_t n = 1; n <= 3; ++n)
      for (int s = 0; s < 8; ++s) {
        const auto rho = cliff::random_stabilizer_state(n, rng);
        for (std::uint64_t code = 0; code < (1ULL << (2 * n + 1)); ++code) {
          const auto p = decode_pauli(BitVector::from_uint(2 * n + 1, code), n);
          if (p.is_identity_up_to_sign()) continue;
          CHECK(label_value(measurement_expectation(rho, p)) == dense_expectation_oracle(rho, p));
        }
      }
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 4 + uniform_below(rng, 3);
      const auto rho = cliff::random_stabilizer_state(n, rng);
      // bias toward group members so all three labels occur
      PauliOperator p = PauliOperator::random(n, rng);
      if (coin(rng)) {
        PhasedPauli acc(n);
        for (const auto& g : rho.generators())
          if (coin(rng)) acc *= g;
        p = acc.to_real();
        if (coin(rng)) p = -p;
      }
      if (p.is_identity_up_to_sign()) continue;
      CHECK(label_value(measurement_expectation(rho, p)) == dense_expectation_oracle(rho, p));
    }
  }
}
