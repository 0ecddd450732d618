// Compiled with -mavx2 -mpopcnt; only reached through the dispatch table after
// a cpuid check.
#include "cnotpac/f2/kernels.hpp"

#include <immintrin.h>

namespace cnotpac::f2::kernels::detail {
namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

inline std::size_t popcnt256(__m256i v) {
  return static_cast<std::size_t>(_mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(v, 0))) +
                                  _mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(v, 1))) +
                                  _mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(v, 2))) +
                                  _mm_popcnt_u64(static_cast<Word>(_mm256_extract_epi64(v, 3))));
}

void xor_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] ^= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) total += popcnt256(_mm256_and_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) total += popcnt256(load(a + i));
  for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return total;
}

unsigned pauli_mul(Word* x1, Word* z1, const Word* x2, const Word* z2, std::size_t n) {
  std::size_t anti_total = 0;
  std::size_t minus_total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i ax = load(x1 + i), az = load(z1 + i), bx = load(x2 + i), bz = load(z2 + i);
    const __m256i x1z2 = _mm256_and_si256(ax, bz);
    const __m256i anti = _mm256_xor_si256(x1z2, _mm256_and_si256(az, bx));
    const __m256i nx = _mm256_xor_si256(ax, bx);
    const __m256i nz = _mm256_xor_si256(az, bz);
    const __m256i minus = _mm256_and_si256(anti, _mm256_xor_si256(_mm256_xor_si256(nx, nz), x1z2));
    store(x1 + i, nx);
    store(z1 + i, nz);
    anti_total += popcnt256(anti);
    minus_total += popcnt256(minus);
  }
  for (; i < n; ++i) {
    const Word x1z2 = x1[i] & z2[i];
    const Word anti = x1z2 ^ (z1[i] & x2[i]);
    x1[i] ^= x2[i];
    z1[i] ^= z2[i];
    const Word minus = anti & (x1[i] ^ z1[i] ^ x1z2);
    anti_total += static_cast<std::size_t>(_mm_popcnt_u64(anti));
    minus_total += static_cast<std::size_t>(_mm_popcnt_u64(minus));
  }
  return static_cast<unsigned>((anti_total + 2 * minus_total) & 3U);
}

void cnot_rows(Word* phase, const Word* xc, Word* zc, Word* xt, const Word* zt, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i vxc = load(xc + i), vzc = load(zc + i), vxt = load(xt + i), vzt = load(zt + i);
    // andnot(a, b) = ~a & b
    const __m256i flip = _mm256_andnot_si256(_mm256_xor_si256(vxt, vzc), _mm256_and_si256(vxc, vzt));
    store(phase + i, _mm256_xor_si256(load(phase + i), flip));
    store(xt + i, _mm256_xor_si256(vxt, vxc));
    store(zc + i, _mm256_xor_si256(vzc, vzt));
  }
  for (; i < n; ++i) {
    phase[i] ^= xc[i] & zt[i] & ~(xt[i] ^ zc[i]);
    xt[i] ^= xc[i];
    zc[i] ^= zt[i];
  }
}

}  // namespace

const KernelTable kAvx2Table{Backend::Avx2, xor_into, and_into, and_popcount, popcount, pauli_mul, cnot_rows};

}  // namespace cnotpac::f2::kernels::detail
