#include "cnotpac/clifford/tableau.hpp"

#include <utility>

#include "cnotpac/error.hpp"

namespace cnotpac::cliff {

using f2::Word;
using stab::PhasedPauli;

CliffordTableau::CliffordTableau(std::size_t n)
    : n_(n), s_(BitMatrix::identity(2 * n)), phases_(2 * n) {}

CliffordTableau::CliffordTableau(BitMatrix s, BitVector phases)
    : n_(s.rows() / 2), s_(std::move(s)), phases_(std::move(phases)) {
  if (s_.rows() != s_.cols() || s_.rows() % 2 != 0) throw DimensionMismatch("tableau matrix must be 2n x 2n");
  if (phases_.size() != s_.rows()) throw DimensionMismatch("tableau needs 2n phase bits");
  if (!is_symplectic(s_, n_)) throw PreconditionViolation("tableau matrix fails the symplectic check S^T L S = L");
}

CliffordTableau CliffordTableau::from_gates(std::size_t n, const GateList& gates) {
  CliffordTableau t(n);
  for (const auto& g : gates) t.apply(g);
  return t;
}

PauliOperator CliffordTableau::image(std::size_t j, bool z_image) const {
  const std::size_t col = 2 * j + (z_image ? 1 : 0);
  PauliOperator p(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (s_.get(2 * i, col)) p.x().set(i);
    if (s_.get(2 * i + 1, col)) p.z().set(i);
  }
  p.set_negative(phases_.get(col));
  return p;
}

namespace {
BitMatrix block(const BitMatrix& s, std::size_t n, std::size_t row_off, std::size_t col_off) {
  BitMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.get(2 * i + row_off, 2 * j + col_off)) b.set(i, j);
  return b;
}
}  // namespace

BitMatrix CliffordTableau::alpha_block() const { return block(s_, n_, 0, 0); }
BitMatrix CliffordTableau::beta_block() const { return block(s_, n_, 1, 0); }
BitMatrix CliffordTableau::gamma_block() const { return block(s_, n_, 0, 1); }
BitMatrix CliffordTableau::theta_block() const { return block(s_, n_, 1, 1); }

BitVector CliffordTableau::p_signs() const {
  BitVector v(n_);
  for (std::size_t j = 0; j < n_; ++j) v.set(j, phases_.get(2 * j));
  return v;
}

BitVector CliffordTableau::q_signs() const {
  BitVector v(n_);
  for (std::size_t j = 0; j < n_; ++j) v.set(j, phases_.get(2 * j + 1));
  return v;
}

void CliffordTableau::apply(const Gate& g) {
  g.validate(n_);
  // Conjugating every stored image by g touches only the x/z rows of the
  // qubits g acts on; the updates are word-parallel across all 2n images.
  Word* ph = phases_.words().data();
  const std::size_t w = phases_.words().size();
  auto xrow = [&](std::uint32_t q) { return s_.row_words(2 * q).data(); };
  auto zrow = [&](std::uint32_t q) { return s_.row_words(2 * q + 1).data(); };
  switch (g.kind) {
    case GateKind::CNOT:
      f2::kernels::active().cnot_rows(ph, xrow(g.a), zrow(g.a), xrow(g.b), zrow(g.b), w);
      break;
    case GateKind::H: {
      Word* x = xrow(g.a);
      Word* z = zrow(g.a);
      for (std::size_t k = 0; k < w; ++k) {
        ph[k] ^= x[k] & z[k];
        std::swap(x[k], z[k]);
      }
      break;
    }
    case GateKind::P: {
      Word* x = xrow(g.a);
      Word* z = zrow(g.a);
      for (std::size_t k = 0; k < w; ++k) {
        ph[k] ^= x[k] & z[k];
        z[k] ^= x[k];
      }
      break;
    }
    case GateKind::X: {  // X Z X = -Z, X Y X = -Y
      const Word* z = zrow(g.a);
      for (std::size_t k = 0; k < w; ++k) ph[k] ^= z[k];
      break;
    }
    case GateKind::Z: {
      const Word* x = xrow(g.a);
      for (std::size_t k = 0; k < w; ++k) ph[k] ^= x[k];
      break;
    }
  }
}

BitMatrix lambda(std::size_t n) {
  BitMatrix l(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    l.set(2 * i, 2 * i + 1);
    l.set(2 * i + 1, 2 * i);
  }
  return l;
}

bool is_symplectic(const BitMatrix& s, std::size_t n) {
  if (s.rows() != 2 * n || s.cols() != 2 * n) throw DimensionMismatch("symplectic check needs a 2n x 2n matrix");
  const BitMatrix l = lambda(n);
  return s.transpose() * l * s == l;
}

CliffordTableau apply_gate(const CliffordTableau& t, const Gate& g) {
  CliffordTableau r = t;
  r.apply(g);
  return r;
}

namespace {

PauliOperator forward(const CliffordTableau& t, const PauliOperator& p) {
  const std::size_t n = t.num_qubits();
  // Letter (x, z) on qubit j is i^{xz} X_j^x Z_j^z; map each factor.
  PhasedPauli acc(n);
  acc.phase = (p.negative() ? 2U : 0U) + static_cast<unsigned>((p.x() & p.z()).weight());
  for (std::size_t j = 0; j < n; ++j) {
    if (p.x().get(j)) acc *= t.image(j, false);
    if (p.z().get(j)) acc *= t.image(j, true);
  }
  acc.phase &= 3U;
  return acc.to_real();
}

}  // namespace

CliffordTableau inverse(const CliffordTableau& t) {
  const std::size_t n = t.num_qubits();
  const BitMatrix l = lambda(n);
  // For symplectic S, S^{-1} = L S^T L.
  const BitMatrix inv = l * t.matrix().transpose() * l;
  BitVector phases(2 * n);
  for (std::size_t col = 0; col < 2 * n; ++col) {
    PauliOperator q(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (inv.get(2 * i, col)) q.x().set(i);
      if (inv.get(2 * i + 1, col)) q.z().set(i);
    }
    // C q C^dagger = +-(generator col), which fixes the sign of C^dagger gen C.
    if (forward(t, q).negative()) phases.set(col);
  }
  return CliffordTableau(inv, phases);
}

PauliOperator conjugate_pauli(const CliffordTableau& t, const PauliOperator& p, Direction dir) {
  if (p.num_qubits() != t.num_qubits()) throw DimensionMismatch("Pauli and tableau qubit counts differ");
  if (dir == Direction::Forward) return forward(t, p);
  return forward(inverse(t), p);
}

CliffordTableau compose(const CliffordTableau& first, const CliffordTableau& second) {
  const std::size_t n = first.num_qubits();
  if (second.num_qubits() != n) throw DimensionMismatch("composed tableaux differ in qubit count");
  BitMatrix s(2 * n, 2 * n);
  BitVector ph(2 * n);
  for (std::size_t j = 0; j < n; ++j)
    for (int zi = 0; zi < 2; ++zi) {
      const PauliOperator img = forward(second, first.image(j, zi != 0));
      const std::size_t col = 2 * j + static_cast<std::size_t>(zi);
      for (std::size_t i = 0; i < n; ++i) {
        s.set(2 * i, col, img.x().get(i));
        s.set(2 * i + 1, col, img.z().get(i));
      }
      ph.set(col, img.negative());
    }
  return CliffordTableau(s, ph);
}

StabilizerState apply_circuit_to_state(const CliffordTableau& t, const StabilizerState& rho) {
  if (rho.num_qubits() != t.num_qubits()) throw DimensionMismatch("state and tableau qubit counts differ");
  std::vector<PauliOperator> gens;
  gens.reserve(rho.num_qubits());
  for (const auto& g : rho.generators()) gens.push_back(forward(t, g));
  return StabilizerState(std::move(gens));
}

GateList random_gate_sequence(std::size_t n, std::size_t length, Rng& rng) {
  GateList gates;
  gates.reserve(length);
  const std::uint64_t kinds = n >= 2 ? 3 : 2;
  for (std::size_t i = 0; i < length; ++i) {
    const auto k = uniform_below(rng, kinds);
    const auto a = static_cast<std::uint32_t>(uniform_below(rng, n));
    if (k == 0) {
      gates.push_back(Gate::h(a));
    } else if (k == 1) {
      gates.push_back(Gate::p(a));
    } else {
      auto b = static_cast<std::uint32_t>(uniform_below(rng, n - 1));
      if (b >= a) ++b;
      gates.push_back(Gate::cnot(a, b));
    }
  }
  return gates;
}

CliffordTableau random_clifford(std::size_t n, std::size_t length, Rng& rng) {
  return CliffordTableau::from_gates(n, random_gate_sequence(n, length, rng));
}

StabilizerState random_stabilizer_state(std::size_t n, Rng& rng) {
  // Random signs on the start state so that negative generators appear.
  const BitVector start = BitVector::random(n, rng);
  return apply_circuit_to_state(random_clifford(n, 4 * n * n + 4, rng), StabilizerState::basis(start));
}

}  // namespace cnotpac::cliff
