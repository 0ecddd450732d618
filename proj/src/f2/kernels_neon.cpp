#include "cnotpac/f2/kernels.hpp"

#if defined(CNOTPAC_HAVE_NEON)
#include <arm_neon.h>

namespace cnotpac::f2::kernels::detail {
namespace {

inline std::size_t popcnt128(uint64x2_t v) {
  return static_cast<std::size_t>(vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v))));
}

void xor_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] ^= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) total += popcnt128(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return total;
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) total += popcnt128(vld1q_u64(a + i));
  for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i]));
  return total;
}

unsigned pauli_mul(Word* x1, Word* z1, const Word* x2, const Word* z2, std::size_t n) {
  std::size_t anti_total = 0;
  std::size_t minus_total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t ax = vld1q_u64(x1 + i), az = vld1q_u64(z1 + i);
    const uint64x2_t bx = vld1q_u64(x2 + i), bz = vld1q_u64(z2 + i);
    const uint64x2_t x1z2 = vandq_u64(ax, bz);
    const uint64x2_t anti = veorq_u64(x1z2, vandq_u64(az, bx));
    const uint64x2_t nx = veorq_u64(ax, bx);
    const uint64x2_t nz = veorq_u64(az, bz);
    const uint64x2_t minus = vandq_u64(anti, veorq_u64(veorq_u64(nx, nz), x1z2));
    vst1q_u64(x1 + i, nx);
    vst1q_u64(z1 + i, nz);
    anti_total += popcnt128(anti);
    minus_total += popcnt128(minus);
  }
  for (; i < n; ++i) {
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
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t vxc = vld1q_u64(xc + i), vzc = vld1q_u64(zc + i);
    const uint64x2_t vxt = vld1q_u64(xt + i), vzt = vld1q_u64(zt + i);
    // bic(a, b) = a & ~b
    const uint64x2_t flip = vbicq_u64(vandq_u64(vxc, vzt), veorq_u64(vxt, vzc));
    vst1q_u64(phase + i, veorq_u64(vld1q_u64(phase + i), flip));
    vst1q_u64(xt + i, veorq_u64(vxt, vxc));
    vst1q_u64(zc + i, veorq_u64(vzc, vzt));
  }
  for (; i < n; ++i) {
    phase[i] ^= xc[i] & zt[i] & ~(xt[i] ^ zc[i]);
    xt[i] ^= xc[i];
    zc[i] ^= zt[i];
  }
}

}  // namespace

const KernelTable kNeonTable{Backend::Neon, xor_into, and_into, and_popcount, popcount, pauli_mul, cnot_rows};

}  // namespace cnotpac::f2::kernels::detail
#endif
