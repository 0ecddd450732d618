#include <atomic>
#include <stdexcept>
#include <string>

#include "cnotpac/f2/kernels.hpp"

namespace cnotpac::f2::kernels {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(CNOTPAC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(CNOTPAC_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Backend b) {
  if (!backend_available(b)) throw std::invalid_argument("kernel backend not available: " + std::string(backend_name(b)));
  switch (b) {
#if defined(CNOTPAC_HAVE_AVX2)
    case Backend::Avx2: return detail::kAvx2Table;
#endif
#if defined(CNOTPAC_HAVE_NEON)
    case Backend::Neon: return detail::kNeonTable;
#endif
    default: return detail::kScalarTable;
  }
}

namespace {

const KernelTable* best() {
  if (backend_available(Backend::Avx2)) return &table(Backend::Avx2);
  if (backend_available(Backend::Neon)) return &table(Backend::Neon);
  return &detail::kScalarTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> ptr{best()};
  return ptr;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void select(Backend b) { current().store(&table(b), std::memory_order_relaxed); }

}  // namespace cnotpac::f2::kernels
