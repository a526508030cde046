#include "homog/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace homog {
namespace {

// One-dimensional kernel value mu(t) for |t| <= 1/2 (unscaled argument).
inline double mu1(int q, double c_q, double t) {
  if (std::fabs(t) > 0.5) return 0.0;
  const double w = 1.0 - 4.0 * t * t;
  double p = 1.0;
  for (int k = 0; k < q; ++k) p *= w;
  return c_q * p;
}

// Composite Simpson of g over [a,b] with n (even) intervals.
double simpson(const std::function<double(double)>& g, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = g(a) + g(b);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * g(a + k * h);
  return s * h / 3.0;
}

// Refine by interval doubling until the estimate is stable.
double integrate(const std::function<double(double)>& g, double a, double b,
                 int n0 = 64) {
  double prev = simpson(g, a, b, n0);
  for (int n = 2 * n0; n <= (1 << 22); n *= 2) {
    const double cur = simpson(g, a, b, n);
    if (std::fabs(cur - prev) <= 1e-13 * std::max(1.0, std::fabs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace

double filter_normalization(int q) {
  if (q < 0) throw std::invalid_argument("filter order q must be >= 0");
  double c = 1.0;
  for (int k = 1; k <= q; ++k) c *= (2.0 * k + 1.0) / (2.0 * k);
  return c;
}

FilterSpec make_filter(int q, double L, int dim) {
  if (q < 0) throw std::invalid_argument("filter order q must be >= 0");
  if (L <= 0.0) throw std::invalid_argument("filter width L must be positive");
  if (dim < 1 || dim > 2) throw std::invalid_argument("filter dim must be 1 or 2");
  return FilterSpec{q, L, dim, filter_normalization(q)};
}

double filter_weight(const FilterSpec& spec, const double* x) {
  double w = 1.0;
  for (int k = 0; k < spec.dim; ++k) {
    const double v = mu1(spec.q, spec.c_q, x[k] / spec.L);
    if (v == 0.0) return 0.0;
    w *= v / spec.L;
  }
  return w;
}

double averaging_error_probe(const std::function<double(double)>& f, int q, double L) {
  if (L < 1.0) throw std::invalid_argument("probe requires L >= 1");
  const double c_q = filter_normalization(q);
  auto weighted = [&](double x) { return f(x) * mu1(q, c_q, x / L) / L; };
  // resolve the oscillations of f: start with ~64 intervals per unit length
  int n0 = 64;
  while (n0 < 64 * static_cast<int>(std::ceil(L))) n0 *= 2;
  const double filtered = integrate(weighted, -0.5 * L, 0.5 * L, n0);
  const double mean = integrate(f, 0.0, 1.0, 64);
  return std::fabs(filtered - mean);
}

}  // namespace homog
