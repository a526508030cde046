#include "homog/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "homog/kernels.hpp"
#include "kernels_impl.hpp"

namespace homog {
namespace {

using simd::Backend;

const kern::detail::KernelTable* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &kern::detail::scalar_table();
#if HOMOG_ARCH_X86
    case Backend::avx2:
      return &kern::detail::avx2_table();
#endif
#if HOMOG_ARCH_ARM64
    case Backend::neon:
      return &kern::detail::neon_table();
#endif
    default:
      return nullptr;
  }
}

Backend pick_default() {
  if (const char* env = std::getenv("HOMOG_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && simd::backend_available(Backend::avx2))
      return Backend::avx2;
    if (std::strcmp(env, "neon") == 0 && simd::backend_available(Backend::neon))
      return Backend::neon;
    // unknown or unavailable value: fall through to auto-detection
  }
#if HOMOG_ARCH_X86
  if (kern::detail::avx2_supported()) return Backend::avx2;
#elif HOMOG_ARCH_ARM64
  return Backend::neon;
#endif
  return Backend::scalar;
}

std::atomic<const kern::detail::KernelTable*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

void ensure_initialized() {
  if (g_table.load(std::memory_order_acquire) == nullptr) {
    Backend b = pick_default();
    g_backend.store(b, std::memory_order_relaxed);
    g_table.store(table_for(b), std::memory_order_release);
  }
}

}  // namespace

namespace simd {

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if HOMOG_ARCH_X86
      return kern::detail::avx2_supported();
#else
      return false;
#endif
    case Backend::neon:
#if HOMOG_ARCH_ARM64
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() {
  ensure_initialized();
  return g_backend.load(std::memory_order_relaxed);
}

void set_backend(Backend b) {
  const kern::detail::KernelTable* t = backend_available(b) ? table_for(b) : nullptr;
  if (t == nullptr)
    throw std::invalid_argument(std::string("SIMD backend unavailable: ") +
                                backend_name(b));
  g_backend.store(b, std::memory_order_relaxed);
  g_table.store(t, std::memory_order_release);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "?";
}

}  // namespace simd

namespace kern {

namespace detail {
const KernelTable& active_table() {
  ensure_initialized();
  return *g_table.load(std::memory_order_acquire);
}
}  // namespace detail

double dot(const double* x, const double* y, std::size_t n) {
  return detail::active_table().dot(x, y, n);
}
double wdot(const double* w, const double* x, const double* y, std::size_t n) {
  return detail::active_table().wdot(w, x, y, n);
}
void axpy(double a, const double* x, double* y, std::size_t n) {
  detail::active_table().axpy(a, x, y, n);
}
void axpby(double a, const double* x, double b, double* y, std::size_t n) {
  detail::active_table().axpby(a, x, b, y, n);
}
void scal(double a, double* x, std::size_t n) { detail::active_table().scal(a, x, n); }
void dscale(double a, const double* d, const double* x, double* y, std::size_t n) {
  detail::active_table().dscale(a, d, x, y, n);
}
void stage5(double* y, std::size_t n, double c0, const double* u0, double c1,
            const double* y1, double c2, const double* y2, double c3,
            const double* f1, double c4, const double* f0) {
  detail::active_table().stage5(y, n, c0, u0, c1, y1, c2, y2, c3, f1, c4, f0);
}
void spmv(std::size_t nrows, const int* row_ptr, const int* col, const double* val,
          const double* x, double* y) {
  detail::active_table().spmv(nrows, row_ptr, col, val, x, y);
}

}  // namespace kern
}  // namespace homog
