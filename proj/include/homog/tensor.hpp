#pragma once

#include <algorithm>
#include <cmath>

namespace homog {

// Small dense d×d matrix, d ∈ {1,2}: coefficient values and homogenized
// tensors.  For d=1 only m[0][0] is meaningful; the rest stays zero.
struct Tensor {
  int dim = 2;
  double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  Tensor() = default;
  explicit Tensor(int d) : dim(d) {}

  static Tensor identity(int d, double s = 1.0) {
    Tensor t(d);
    for (int i = 0; i < d; ++i) t.m[i][i] = s;
    return t;
  }

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }
};

inline Tensor operator+(const Tensor& a, const Tensor& b) {
  Tensor r(a.dim);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

inline Tensor operator-(const Tensor& a, const Tensor& b) {
  Tensor r(a.dim);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

inline Tensor operator*(double s, const Tensor& a) {
  Tensor r(a.dim);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = s * a.m[i][j];
  return r;
}

inline double frobenius_norm(const Tensor& a) {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += a.m[i][j] * a.m[i][j];
  return std::sqrt(s);
}

inline double max_abs(const Tensor& a) {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s = std::max(s, std::fabs(a.m[i][j]));
  return s;
}

inline void symmetrize(Tensor& a) {
  const double off = 0.5 * (a.m[0][1] + a.m[1][0]);
  a.m[0][1] = a.m[1][0] = off;
}

}  // namespace homog
