#include "homog/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace homog {

namespace {

void check_nodes(const std::vector<double>& t) {
  if (t.size() < 2) throw std::invalid_argument("quadrature: need at least two nodes");
  for (std::size_t k = 1; k < t.size(); ++k)
    if (!(t[k] > t[k - 1]))
      throw std::invalid_argument("quadrature: nodes must be strictly increasing");
}

}  // namespace

std::vector<double> simpson_weights(const std::vector<double>& t) {
  check_nodes(t);
  const std::size_t n = t.size() - 1;  // intervals
  std::vector<double> w(t.size(), 0.0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const double h1 = t[k + 1] - t[k];
    const double h2 = t[k + 2] - t[k + 1];
    const double s = (h1 + h2) / 6.0;
    w[k] += s * (2.0 - h2 / h1);
    w[k + 1] += s * ((h1 + h2) * (h1 + h2) / (h1 * h2));
    w[k + 2] += s * (2.0 - h1 / h2);
  }
  if (k < n) {  // odd leftover interval
    const double h = t[k + 1] - t[k];
    w[k] += 0.5 * h;
    w[k + 1] += 0.5 * h;
  }
  return w;
}

double simpson_nonuniform(const std::vector<double>& t, const std::vector<double>& v) {
  if (v.size() != t.size()) throw std::invalid_argument("quadrature: node/value size mismatch");
  const std::vector<double> w = simpson_weights(t);
  double s = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * v[k];
  return s;
}

std::vector<double> graded_schedule(double T, int n, double gamma) {
  if (!(T > 0.0)) throw std::invalid_argument("quadrature: horizon must be positive");
  if (n < 2) throw std::invalid_argument("quadrature: need at least two steps");
  if (!(gamma >= 1.0)) throw std::invalid_argument("quadrature: grading exponent must be >= 1");
  std::vector<double> t(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    t[static_cast<std::size_t>(k)] =
        T * std::pow(static_cast<double>(k) / static_cast<double>(n), gamma);
  t[0] = 0.0;
  t[static_cast<std::size_t>(n)] = T;
  return t;
}

}  // namespace homog
