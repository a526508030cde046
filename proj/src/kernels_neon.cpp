#include "kernels_impl.hpp"

#if HOMOG_ARCH_ARM64

#include <arm_neon.h>

// NEON variants, 2 doubles per vector.  NEON is baseline on aarch64, so no
// runtime feature check is needed beyond the architecture itself.

namespace homog::kern::detail {
namespace {

inline double hsum(float64x2_t v) { return vgetq_lane_f64(v, 0) + vgetq_lane_f64(v, 1); }

double dot_v(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double wdot_v(const double* w, const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t wx = vmulq_f64(vld1q_f64(w + i), vld1q_f64(x + i));
    acc = vfmaq_f64(acc, wx, vld1q_f64(y + i));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * x[i] * y[i];
  return s;
}

void axpy_v(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void axpby_v(double a, const double* x, double b, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t by = vmulq_f64(vb, vld1q_f64(y + i));
    vst1q_f64(y + i, vfmaq_f64(by, va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void scal_v(double a, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

void dscale_v(double a, const double* d, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t ad = vmulq_f64(va, vld1q_f64(d + i));
    vst1q_f64(y + i, vmulq_f64(ad, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] = a * d[i] * x[i];
}

void stage5_v(double* y, std::size_t n, double c0, const double* u0, double c1,
              const double* y1, double c2, const double* y2, double c3,
              const double* f1, double c4, const double* f0) {
  const float64x2_t v0 = vdupq_n_f64(c0);
  const float64x2_t v1 = vdupq_n_f64(c1);
  const float64x2_t v2 = vdupq_n_f64(c2);
  const float64x2_t v3 = vdupq_n_f64(c3);
  const float64x2_t v4 = vdupq_n_f64(c4);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vmulq_f64(v0, vld1q_f64(u0 + i));
    acc = vfmaq_f64(acc, v1, vld1q_f64(y1 + i));
    acc = vfmaq_f64(acc, v2, vld1q_f64(y2 + i));
    acc = vfmaq_f64(acc, v3, vld1q_f64(f1 + i));
    acc = vfmaq_f64(acc, v4, vld1q_f64(f0 + i));
    vst1q_f64(y + i, acc);
  }
  for (; i < n; ++i)
    y[i] = c0 * u0[i] + c1 * y1[i] + c2 * y2[i] + c3 * f1[i] + c4 * f0[i];
}

void spmv_v(std::size_t nrows, const int* row_ptr, const int* col,
            const double* val, const double* x, double* y) {
  for (std::size_t i = 0; i < nrows; ++i) {
    const int lo = row_ptr[i], hi = row_ptr[i + 1];
    int k = lo;
    float64x2_t acc = vdupq_n_f64(0.0);
    for (; k + 2 <= hi; k += 2) {
      // no gathers on NEON: assemble the x pair manually
      float64x2_t xv = vsetq_lane_f64(x[col[k + 1]], vdupq_n_f64(x[col[k]]), 1);
      acc = vfmaq_f64(acc, vld1q_f64(val + k), xv);
    }
    double s = hsum(acc);
    for (; k < hi; ++k) s += val[k] * x[col[k]];
    y[i] = s;
  }
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable t = {dot_v, wdot_v, axpy_v, axpby_v, scal_v,
                                dscale_v, stage5_v, spmv_v};
  return t;
}

}  // namespace homog::kern::detail

#endif  // HOMOG_ARCH_ARM64
