#include "cnotpac/f2/kernels.hpp"

namespace cnotpac::f2::kernels::detail {
namespace {

void xor_into(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return total;
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i]));
  return total;
}

// Per qubit the letter product contributes i^{+1} for (X,Y), (Y,Z), (Z,X),
// i^{-1} for the reversed pairs and nothing when the letters commute.
unsigned pauli_mul(Word* x1, Word* z1, const Word* x2, const Word* z2, std::size_t n) {
  std::size_t anti_total = 0;
  std::size_t minus_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Word x1z2 = x1[i] & z2[i];
    const Word anti = x1z2 ^ (z1[i] & x2[i]);
    x1[i] ^= x2[i];
    z1[i] ^= z2[i];
    const Word minus = anti & (x1[i] ^ z1[i] ^ x1z2);
    anti_total += static_cast<std::size_t>(__builtin_popcountll(anti));
    minus_total += static_cast<std::size_t>(__builtin_popcountll(minus));
  }
  return static_cast<unsigned>((anti_total + 2 * minus_total) & 3U);
}

void cnot_rows(Word* phase, const Word* xc, Word* zc, Word* xt, const Word* zt, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    phase[i] ^= xc[i] & zt[i] & ~(xt[i] ^ zc[i]);
    xt[i] ^= xc[i];
    zc[i] ^= zt[i];
  }
}

}  // namespace

const KernelTable kScalarTable{Backend::Scalar, xor_into, and_into, and_popcount, popcount, pauli_mul, cnot_rows};

}  // namespace cnotpac::f2::kernels::detail
