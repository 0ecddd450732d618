#pragma once

// Word-level GF(2) kernels. Every routine has a portable scalar reference
// implementation; AVX2 (x86-64) and NEON (AArch64) variants are compiled when
// the toolchain supports them and selected at runtime. All variants must be
// bit-for-bit identical, which tests/unit/test_kernels.cpp checks.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cnotpac::f2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

namespace kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

struct KernelTable {
  Backend backend;
  // dst[i] ^= src[i]
  void (*xor_into)(Word* dst, const Word* src, std::size_t n);
  // dst[i] &= src[i]
  void (*and_into)(Word* dst, const Word* src, std::size_t n);
  // popcount(a & b) over n words
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
  // In-place Pauli product (x1,z1) <- (x1,z1)*(x2,z2) on letter-encoded
  // strings; returns the exponent e (mod 4) of the phase i^e produced by
  // the letter products.
  unsigned (*pauli_mul)(Word* x1, Word* z1, const Word* x2, const Word* z2, std::size_t n);
  // Tableau rows for CNOT(control, target): phase ^= xc & zt & ~(xt ^ zc);
  // xt ^= xc; zc ^= zt.
  void (*cnot_rows)(Word* phase, const Word* xc, Word* zc, Word* xt, const Word* zt,
                    std::size_t n);
};

bool backend_available(Backend b);
const KernelTable& table(Backend b);

/// Backend used by the free functions below. Defaults to the widest
/// available variant; `select` is intended for tests and benchmarks.
const KernelTable& active();
void select(Backend b);

namespace detail {
extern const KernelTable kScalarTable;
#if defined(CNOTPAC_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(CNOTPAC_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif
}  // namespace detail

}  // namespace kernels

inline void xor_into(std::span<Word> dst, std::span<const Word> src) {
  if (dst.size() == 1) {
    dst[0] ^= src[0];
    return;
  }
  kernels::active().xor_into(dst.data(), src.data(), dst.size());
}

inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  if (a.size() == 1) return static_cast<std::size_t>(__builtin_popcountll(a[0] & b[0]));
  return kernels::active().and_popcount(a.data(), b.data(), a.size());
}

inline std::size_t popcount(std::span<const Word> a) {
  if (a.size() == 1) return static_cast<std::size_t>(__builtin_popcountll(a[0]));
  return kernels::active().popcount(a.data(), a.size());
}

}  // namespace cnotpac::f2
