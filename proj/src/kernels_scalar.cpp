#include "kernels_impl.hpp"

// Reference implementations.  These define the semantics every SIMD variant
// must reproduce (up to floating-point reassociation); keep them dead simple.

namespace homog::kern::detail {
namespace {

double dot_s(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double wdot_s(const double* w, const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * x[i] * y[i];
  return s;
}

void axpy_s(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpby_s(double a, const double* x, double b, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void scal_s(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void dscale_s(double a, const double* d, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * d[i] * x[i];
}

void stage5_s(double* y, std::size_t n, double c0, const double* u0, double c1,
              const double* y1, double c2, const double* y2, double c3,
              const double* f1, double c4, const double* f0) {
  for (std::size_t i = 0; i < n; ++i)
    y[i] = c0 * u0[i] + c1 * y1[i] + c2 * y2[i] + c3 * f1[i] + c4 * f0[i];
}

void spmv_s(std::size_t nrows, const int* row_ptr, const int* col,
            const double* val, const double* x, double* y) {
  for (std::size_t i = 0; i < nrows; ++i) {
    double s = 0.0;
    for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) s += val[k] * x[col[k]];
    y[i] = s;
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t = {dot_s, wdot_s, axpy_s, axpby_s, scal_s,
                                dscale_s, stage5_s, spmv_s};
  return t;
}

}  // namespace homog::kern::detail
