#include "doctest.h"
#include "oracles.hpp"

#include "cnotpac/clifford/cnot.hpp"
#include "cnotpac/error.hpp"

using namespace cnotpac;
using namespace cnotpac::cliff;
using stab::Label;

namespace {
PauliOperator P(const char* s) { return PauliOperator::parse(s); }

// C P C^dagger == image, checked with dense matrices.
bool dense_forward_ok(const GateList& gates, std::size_t n, const PauliOperator& p, const PauliOperator& image) {
  const auto u = oracle::circuit_matrix(gates, n);
  return (u * oracle::pauli_matrix(p) * u.dagger()).approx(oracle::pauli_matrix(image));
}

GateList random_gates(std::size_t n, std::size_t len, Rng& rng) {
  GateList g = random_gate_sequence(n, len, rng);
  // sprinkle in X and Z too
  for (std::size_t i = 0; i < len / 4; ++i) {
    const auto q = static_cast<std::uint32_t>(uniform_below(rng, n));
    g.insert(g.begin() + static_cast<long>(uniform_below(rng, g.size() + 1)), coin(rng) ? Gate::x(q) : Gate::z(q));
  }
  return g;
}
}  // namespace

TEST_SUITE("clifford") {
  TEST_CASE("is_symplectic") {
    CHECK(is_symplectic(BitMatrix::identity(4), 2));
    CHECK(is_symplectic(lambda(3), 3));
    // At n = 1 every invertible matrix is symplectic; this one is H P H.
    CHECK(is_symplectic(BitMatrix::from_rows({"11", "01"}), 1));
    CHECK(CliffordTableau::from_gates(1, {Gate::h(0), Gate::p(0), Gate::h(0)}).matrix() == BitMatrix::from_rows({"11", "01"}));
    // X_1 -> X_0 X_1 with Z_0 fixed breaks their commutation.
    const auto bad = BitMatrix::from_rows({"1010", "0100", "0010", "0001"});
    CHECK_FALSE(is_symplectic(bad, 2));
    CHECK_THROWS_AS(is_symplectic(BitMatrix(3, 3), 1), DimensionMismatch);
    CHECK((lambda(3) * lambda(3)) == BitMatrix::identity(6));
    CHECK_THROWS_AS(CliffordTableau(bad, BitVector(4)), PreconditionViolation);
  }

  TEST_CASE("CNOT moves the target's Z image onto the control") {
    CliffordTableau t(2);
    t.apply(Gate::cnot(0, 1));
    CHECK(conjugate_pauli(t, P("IZ"), Direction::Forward) == P("ZZ"));
    CHECK(conjugate_pauli(t, P("XI"), Direction::Forward) == P("XX"));
    CHECK(dense_forward_ok({Gate::cnot(0, 1)}, 2, P("IZ"), P("ZZ")));
    // theta gets row 1 added into row 0
    CHECK(t.theta_block() == BitMatrix::from_rows({"11", "01"}));
  }

  TEST_CASE("X flips Z signs only") {
    CliffordTableau t(2);
    t.apply(Gate::x(0));
    CHECK(t.q_signs() == BitVector::from_string("10"));
    CHECK(t.p_signs() == BitVector(2));
    CHECK(t.matrix() == BitMatrix::identity(4));
  }

  TEST_CASE("H twice is the identity") {
    Rng rng(41);
    for (int k = 0; k < 20; ++k) {
      auto t = random_clifford(3, 20, rng);
      const auto before = t;
      t.apply(Gate::h(1));
      t.apply(Gate::h(1));
      CHECK(t == before);
    }
  }

  TEST_CASE("forward conjugation matches dense unitaries") {
    Rng rng(42);
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = 1 + uniform_below(rng, 3);
      const auto gates = random_gates(n, 12, rng);
      const auto t = CliffordTableau::from_gates(n, gates);
      const auto p = PauliOperator::random(n, rng);
      CHECK(dense_forward_ok(gates, n, p, conjugate_pauli(t, p, Direction::Forward)));
      // inverse direction: C^dagger P C
      const auto u = oracle::circuit_matrix(gates, n);
      CHECK((u.dagger() * oracle::pauli_matrix(p) * u)
                .approx(oracle::pauli_matrix(conjugate_pauli(t, p, Direction::Inverse))));
    }
  }

  TEST_CASE("conjugation round trip and homomorphism") {
    Rng rng(43);
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = 1 + uniform_below(rng, 5);
      const auto t = CliffordTableau::from_gates(n, random_gates(n, 30, rng));
      const auto p = PauliOperator::random(n, rng), q = PauliOperator::random(n, rng);
      CHECK(conjugate_pauli(t, conjugate_pauli(t, p, Direction::Forward), Direction::Inverse) == p);
      // image(p q) = image(p) image(q), including the phase
      const auto pq = p * q;
      const auto ip = conjugate_pauli(t, p, Direction::Forward), iq = conjugate_pauli(t, q, Direction::Forward);
      auto img_pq = stab::PhasedPauli(conjugate_pauli(t, PauliOperator(false, pq.x, pq.z), Direction::Forward));
      img_pq.phase = (img_pq.phase + pq.phase) & 3U;
      const auto prod = ip * iq;
      CHECK(prod.phase == img_pq.phase);
      CHECK(prod.x == img_pq.x);
      CHECK(prod.z == img_pq.z);
    }
  }

  TEST_CASE("compose and inverse") {
    Rng rng(44);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 1 + uniform_below(rng, 5);
      const auto g1 = random_gates(n, 15, rng), g2 = random_gates(n, 15, rng);
      GateList both = g1;
      both.insert(both.end(), g2.begin(), g2.end());
      const auto t1 = CliffordTableau::from_gates(n, g1), t2 = CliffordTableau::from_gates(n, g2);
      CHECK(compose(t1, t2) == CliffordTableau::from_gates(n, both));
      CHECK(compose(t1, inverse(t1)) == CliffordTableau(n));
      CHECK(compose(inverse(t1), t1) == CliffordTableau(n));
    }
  }

  TEST_CASE("symplectic invariant under random gate sequences") {
    Rng rng(45);
    for (int k = 0; k < 50; ++k) {
      const std::size_t n = 1 + uniform_below(rng, 6);
      CliffordTableau t(n);
      for (const auto& g : random_gates(n, 200, rng)) {
        t.apply(g);
        REQUIRE(is_symplectic(t.matrix(), n));
      }
    }
  }

  TEST_CASE("gate validation") {
    CliffordTableau t(2);
    CHECK_THROWS_AS(t.apply(Gate::h(2)), DimensionMismatch);
    CHECK_THROWS_AS(t.apply(Gate::cnot(1, 1)), PreconditionViolation);
    CHECK_THROWS_AS(CnotCircuit(2, {Gate::h(0)}), PreconditionViolation);
  }

  TEST_CASE("apply_circuit_to_state") {
    const auto ket10 = StabilizerState::basis(BitVector::from_string("10"));
    CHECK(apply_circuit_to_state(CliffordTableau(2), ket10) == ket10);
    const auto out = apply_circuit_to_state(CliffordTableau::from_gates(2, {Gate::cnot(0, 1)}), ket10);
    // |11>: both Z_1 and Z_2 have expectation 0 under (I+Z)/2
    CHECK(stab::measurement_expectation(out, P("ZI")) == Label::Zero);
    CHECK(stab::measurement_expectation(out, P("IZ")) == Label::Zero);
    CHECK(stab::measurement_expectation(out, P("ZZ")) == Label::One);
  }

  TEST_CASE("evaluate_sample agrees with the dense trace") {
    Rng rng(46);
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = 1 + uniform_below(rng, 3);
      const auto gates = random_gates(n, 10, rng);
      const auto t = CliffordTableau::from_gates(n, gates);
      const auto rho = random_stabilizer_state(n, rng);
      auto p = PauliOperator::random(n, rng);
      if (p.is_identity_up_to_sign()) continue;
      const LabeledSample s{rho, p, Label::Half};
      const auto label = evaluate_sample(t, s);
      // dense: tr[(I+P)/2 U rho U^dagger]
      const auto u = oracle::circuit_matrix(gates, n);
      const auto evolved = apply_circuit_to_state(t, rho);
      CHECK(label == stab::measurement_expectation(evolved, p));
      CHECK(stab::label_value(label) == stab::dense_expectation_oracle(evolved, p));
      // and the evolved state really is U rho U^dagger: each generator image is
      // U g U^dagger
      for (std::size_t i = 0; i < n; ++i) {
        const auto g = oracle::pauli_matrix(rho.generators()[i]);
        CHECK((u * g * u.dagger()).approx(oracle::pauli_matrix(evolved.generators()[i])));
      }
    }
    CHECK(evaluate_sample(CliffordTableau(2), LabeledSample{StabilizerState::zero(2), P("ZI"), Label::Half}) ==
          Label::One);
  }

  TEST_CASE("synthesis examples") {
    CHECK(synthesize_cnot_from_theta(BitMatrix::identity(3), BitVector(3)).gates().empty());
    const auto one_x = synthesize_cnot_from_theta(BitMatrix::identity(3), BitVector::unit(3, 0));
    REQUIRE(one_x.gates().size() == 1);
    CHECK(one_x.gates()[0] == Gate::x(0));
    const auto theta = BitMatrix::from_rows({"10", "11"});
    const auto c = synthesize_cnot_from_theta(theta, BitVector(2));
    REQUIRE(c.gates().size() == 1);
    CHECK(c.gates()[0] == Gate::cnot(1, 0));
    CHECK(apply_gate(CliffordTableau(2), c.gates()[0]).theta_block() == theta);
    CHECK_THROWS_AS(synthesize_cnot_from_theta(BitMatrix::from_rows({"11", "11"}), BitVector(2)), SingularTheta);
  }

  TEST_CASE("synthesis round trip, exhaustive n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t count = 0;
      oracle::for_each_gl(n, [&](const BitMatrix& theta) {
        ++count;
        for (std::uint64_t qb = 0; qb < (1ULL << n); ++qb) {
          const auto q = BitVector::from_uint(n, qb);
          const auto c = synthesize_cnot_from_theta(theta, q);
          REQUIRE(c.gates().size() <= n * n + n);
          const auto t = cnot_to_tableau(c);
          CHECK(t.theta_block() == theta);
          CHECK(t.q_signs() == q);
          CHECK(t.gamma_block().is_zero());
          CHECK(t.beta_block().is_zero());
          CHECK(t.p_signs() == BitVector(n));
          CHECK(t.alpha_block() == f2::invert(theta).transpose());
          CHECK(c.theta() == theta);
          CHECK(c.q() == q);
        }
      });
      if (n == 3) CHECK(count == 168);
    }
  }

  TEST_CASE("synthesis round trip, random up to n = 6 and pullback accessors") {
    Rng rng(47);
    for (int k = 0; k < 300; ++k) {
      const std::size_t n = 1 + uniform_below(rng, 6);
      const auto c = random_cnot_circuit(n, rng);
      const auto t = c.tableau();
      CHECK(t.theta_block() == c.theta());
      CHECK(t.q_signs() == c.q());
      const auto g = c.pullback();
      const auto qt = c.pullback_signs();
      // C^dagger Z^b C = (-1)^{qt.b} Z^{G b}
      const auto b = BitVector::random(n, rng);
      auto expect = PauliOperator::z_power(g * b);
      expect.set_negative(qt.dot(b));
      CHECK(conjugate_pauli(t, PauliOperator::z_power(b), Direction::Inverse) == expect);
      // C^dagger X^a C = X^{G^{-T} a}
      CHECK(conjugate_pauli(t, PauliOperator::x_power(b), Direction::Inverse) ==
            PauliOperator::x_power(c.theta().transpose() * b));
      const auto back = CnotCircuit::from_pullback(g, qt);
      CHECK(back.theta() == c.theta());
      CHECK(back.q() == c.q());
    }
  }

  TEST_CASE("composition of CNOT circuits multiplies theta") {
    Rng rng(48);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 1 + uniform_below(rng, 5);
      const auto c1 = random_cnot_circuit(n, rng), c2 = random_cnot_circuit(n, rng);
      const auto t = compose(c1.tableau(), c2.tableau());
      // Z images of c1 are pushed through c2: theta_total = theta2 * theta1
      CHECK(t.theta_block() == c2.theta() * c1.theta());
      CHECK(t.gamma_block().is_zero());
      CHECK(t.p_signs() == BitVector(n));
    }
  }
}
