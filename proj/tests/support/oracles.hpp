#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// bitwise phase arithmetic; conjugations are done with explicit dense matrices.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "cnotpac/clifford/gate.hpp"
#include "cnotpac/f2/bit_matrix.hpp"
#include "cnotpac/stabilizer/pauli.hpp"

namespace oracle {

using cd = std::complex<double>;

struct Dense {
  std::size_t dim = 0;
  std::vector<cd> a;

  explicit Dense(std::size_t d = 0) : dim(d), a(d * d, 0.0) {}
  static Dense eye(std::size_t d) {
    Dense m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
  }
  cd& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  cd operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  Dense operator*(const Dense& o) const {
    Dense p(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        const cd v = (*this)(i, k);
        if (v == 0.0) continue;
        for (std::size_t j = 0; j < dim; ++j) p(i, j) += v * o(k, j);
      }
    return p;
  }
  Dense dagger() const {
    Dense d(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) d(j, i) = std::conj((*this)(i, j));
    return d;
  }
  bool approx(const Dense& o, double tol = 1e-9) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - o.a[i]) > tol) return false;
    return true;
  }
};

// Kronecker product of per-qubit 2x2 matrices, qubit 0 most significant.
inline Dense kron_letters(const std::vector<Dense>& per_qubit) {
  Dense m = Dense::eye(1);
  for (const auto& f : per_qubit) {
    Dense k(m.dim * 2);
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j)
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t c = 0; c < 2; ++c) k(i * 2 + r, j * 2 + c) = m(i, j) * f(r, c);
    m = k;
  }
  return m;
}

inline Dense letter_matrix(char l) {
  Dense m(2);
  const cd I(0, 1);
  switch (l) {
    case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
    case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'Y': m(0, 1) = -I; m(1, 0) = I; break;
    case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
  }
  return m;
}

inline Dense pauli_matrix(const cnotpac::stab::PauliOperator& p) {
  std::vector<Dense> f;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) f.push_back(letter_matrix(p.letter(q)));
  Dense m = kron_letters(f);
  if (p.negative())
    for (auto& v : m.a) v = -v;
  return m;
}

inline Dense gate_matrix(const cnotpac::cliff::Gate& g, std::size_t n) {
  using cnotpac::cliff::GateKind;
  const std::size_t dim = std::size_t{1} << n;
  auto bit = [&](std::size_t b, std::size_t q) { return (b >> (n - 1 - q)) & 1U; };
  Dense m(dim);
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t mask = std::size_t{1} << (n - 1 - g.a);
    switch (g.kind) {
      case GateKind::CNOT: {
        const std::size_t row = bit(col, g.a) ? col ^ (std::size_t{1} << (n - 1 - g.b)) : col;
        m(row, col) = 1;
        break;
      }
      case GateKind::X: m(col ^ mask, col) = 1; break;
      case GateKind::Z: m(col, col) = bit(col, g.a) ? -1.0 : 1.0; break;
      case GateKind::P: m(col, col) = bit(col, g.a) ? cd(0, 1) : cd(1, 0); break;
      case GateKind::H:
        m(col & ~mask, col) += s;
        m(col | mask, col) += bit(col, g.a) ? -s : s;
        break;
    }
  }
  return m;
}

// Unitary of a gate list; gates listed first act first.
inline Dense circuit_matrix(const cnotpac::cliff::GateList& gates, std::size_t n) {
  Dense u = Dense::eye(std::size_t{1} << n);
  for (const auto& g : gates) u = gate_matrix(g, n) * u;
  return u;
}

// Calls f(G) for every G in GL(n, 2), enumerated as integers over the packed
// row-major bits with a rank filter. Plain and slow on purpose.
inline void for_each_gl(std::size_t n, const std::function<void(const cnotpac::f2::BitMatrix&)>& f) {
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    cnotpac::f2::BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if ((bits >> (r * n + c)) & 1U) m.set(r, c);
    if (cnotpac::f2::rank(m) == n) f(m);
  }
}

// GF(2) determinant via cofactor expansion; independent of elimination.
inline bool det_cofactor(const cnotpac::f2::BitMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return true;
  if (n == 1) return m.get(0, 0);
  bool acc = false;
  for (std::size_t c = 0; c < n; ++c) {
    if (!m.get(0, c)) continue;
    cnotpac::f2::BitMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
        if (cc == c) continue;
        if (m.get(r, cc)) minor.set(r - 1, k);
        ++k;
      }
    acc ^= det_cofactor(minor);
  }
  return acc;
}

}  // namespace oracle
