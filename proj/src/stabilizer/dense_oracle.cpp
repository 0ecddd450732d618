// Dense cross-check for measurement_expectation. It works from the textbook
// 2x2 letter matrices only and never touches the bitwise phase arithmetic.
#include <complex>
#include <cstdint>
#include <vector>

#include "cnotpac/error.hpp"
#include "cnotpac/stabilizer/state.hpp"

namespace cnotpac::stab {

namespace {

using cd = std::complex<double>;

// Generalised permutation matrix: column c has one nonzero, at row[c].
struct Monomial {
  std::vector<std::uint32_t> row;
  std::vector<cd> val;
};

Monomial dense_pauli(const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  const std::uint32_t dim = 1U << n;
  Monomial m{std::vector<std::uint32_t>(dim), std::vector<cd>(dim)};
  const cd I(0, 1);
  for (std::uint32_t col = 0; col < dim; ++col) {
    std::uint32_t row = 0;
    cd v = p.negative() ? -1.0 : 1.0;
    for (std::size_t q = 0; q < n; ++q) {
      // qubit 0 is the most significant bit of the basis index
      const unsigned in = (col >> (n - 1 - q)) & 1U;
      unsigned out = in;
      switch (p.letter(q)) {
        case 'I': break;
        case 'X': out = in ^ 1U; break;
        case 'Y':  // [[0,-i],[i,0]]
          out = in ^ 1U;
          v *= in == 0 ? I : -I;
          break;
        case 'Z':
          if (in) v = -v;
          break;
      }
      row |= out << (n - 1 - q);
    }
    m.row[col] = row;
    m.val[col] = v;
  }
  return m;
}

}  // namespace

double dense_expectation_oracle(const StabilizerState& rho, const PauliOperator& p) {
  const std::size_t n = rho.num_qubits();
  if (n > 10) throw PreconditionViolation("dense oracle is limited to n <= 10");
  if (p.num_qubits() != n) throw DimensionMismatch("state and measurement qubit counts differ");
  const std::size_t dim = std::size_t{1} << n;

  // rho = prod_i (I + g_i)/2, which expands to 2^{-n} times the group sum.
  std::vector<cd> r(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) r[i * dim + i] = 1.0;
  std::vector<cd> next(dim * dim);
  for (const auto& g : rho.generators()) {
    const Monomial m = dense_pauli(g);
    // next = r * (I + g) / 2; (r g)[a][c] = r[a][row[c]] * val[c]
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t c = 0; c < dim; ++c)
        next[a * dim + c] = 0.5 * (r[a * dim + c] + r[a * dim + m.row[c]] * m.val[c]);
    r.swap(next);
  }

  // E = (I + P)/2 held densely, then tr[E rho].
  std::vector<cd> e(dim * dim, 0.0);
  const Monomial pm = dense_pauli(p);
  for (std::size_t c = 0; c < dim; ++c) {
    e[c * dim + c] += 0.5;
    e[pm.row[c] * dim + c] += 0.5 * pm.val[c];
  }
  cd tr = 0.0;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) tr += e[a * dim + b] * r[b * dim + a];
  return tr.real();
}

}  // namespace cnotpac::stab
