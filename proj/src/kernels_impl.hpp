#pragma once

#include <cstddef>

#include "homog/simd.hpp"

// Internal: per-backend kernel tables.  Only simd.cpp and the kernel
// translation units include this.

namespace homog::kern::detail {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*wdot)(const double*, const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*axpby)(double, const double*, double, double*, std::size_t);
  void (*scal)(double, double*, std::size_t);
  void (*dscale)(double, const double*, const double*, double*, std::size_t);
  void (*stage5)(double*, std::size_t, double, const double*, double, const double*,
                 double, const double*, double, const double*, double, const double*);
  void (*spmv)(std::size_t, const int*, const int*, const double*, const double*, double*);
};

const KernelTable& scalar_table();
#if HOMOG_ARCH_X86
const KernelTable& avx2_table();
bool avx2_supported();
#endif
#if HOMOG_ARCH_ARM64
const KernelTable& neon_table();
#endif

// Resolved dispatch table (simd.cpp).
const KernelTable& active_table();

}  // namespace homog::kern::detail
