#include "kernels_impl.hpp"

#if HOMOG_ARCH_X86

#include <immintrin.h>

// AVX2+FMA variants, 4 doubles per vector, scalar tail loops.  This TU is
// compiled with -mavx2 -mfma; it must only be entered through the runtime
// dispatch in simd.cpp after a cpuid check.

namespace homog::kern::detail {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_v(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double wdot_v(const double* w, const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d wx = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i));
    acc = _mm256_fmadd_pd(wx, _mm256_loadu_pd(y + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * x[i] * y[i];
  return s;
}

void axpy_v(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void axpby_v(double a, const double* x, double b, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d by = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), by));
  }
  for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void scal_v(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

void dscale_v(double a, const double* d, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ad = _mm256_mul_pd(va, _mm256_loadu_pd(d + i));
    _mm256_storeu_pd(y + i, _mm256_mul_pd(ad, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) y[i] = a * d[i] * x[i];
}

void stage5_v(double* y, std::size_t n, double c0, const double* u0, double c1,
              const double* y1, double c2, const double* y2, double c3,
              const double* f1, double c4, const double* f0) {
  const __m256d v0 = _mm256_set1_pd(c0);
  const __m256d v1 = _mm256_set1_pd(c1);
  const __m256d v2 = _mm256_set1_pd(c2);
  const __m256d v3 = _mm256_set1_pd(c3);
  const __m256d v4 = _mm256_set1_pd(c4);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_mul_pd(v0, _mm256_loadu_pd(u0 + i));
    acc = _mm256_fmadd_pd(v1, _mm256_loadu_pd(y1 + i), acc);
    acc = _mm256_fmadd_pd(v2, _mm256_loadu_pd(y2 + i), acc);
    acc = _mm256_fmadd_pd(v3, _mm256_loadu_pd(f1 + i), acc);
    acc = _mm256_fmadd_pd(v4, _mm256_loadu_pd(f0 + i), acc);
    _mm256_storeu_pd(y + i, acc);
  }
  for (; i < n; ++i)
    y[i] = c0 * u0[i] + c1 * y1[i] + c2 * y2[i] + c3 * f1[i] + c4 * f0[i];
}

void spmv_v(std::size_t nrows, const int* row_ptr, const int* col,
            const double* val, const double* x, double* y) {
  for (std::size_t i = 0; i < nrows; ++i) {
    const int lo = row_ptr[i], hi = row_ptr[i + 1];
    int k = lo;
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= hi; k += 4) {
      __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(col + k));
      __m256d xv = _mm256_i32gather_pd(x, idx, 8);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(val + k), xv, acc);
    }
    double s = hsum(acc);
    for (; k < hi; ++k) s += val[k] * x[col[k]];
    y[i] = s;
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t = {dot_v, wdot_v, axpy_v, axpby_v, scal_v,
                                dscale_v, stage5_v, spmv_v};
  return t;
}

bool avx2_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace homog::kern::detail

#endif  // HOMOG_ARCH_X86
