#include "homog/coefficients.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace homog {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Canonical-cell representative of x for a field of the given period.
// IEEE remainder is exact, so periodic images evaluate identically whenever
// x + period is exactly representable.
inline double wrap(double x, double period) { return std::remainder(x, period); }

// Uniform in [0,1) with 53 random bits; keeps the lognormal realization
// independent of the standard library's distribution implementations.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Box–Muller pair of standard normals.
inline void gauss_pair(std::mt19937_64& gen, double& z0, double& z1) {
  const double u1 = 1.0 - uniform01(gen);  // (0,1], keeps log() finite
  const double u2 = uniform01(gen);
  const double r = std::sqrt(-2.0 * std::log(u1));
  z0 = r * std::cos(kTwoPi * u2);
  z1 = r * std::sin(kTwoPi * u2);
}

// Eigenvalue extremes of a symmetric 2x2 (or 1x1) tensor.
inline void eig_range(const Tensor& t, double& lo, double& hi) {
  if (t.dim == 1) {
    lo = hi = t.m[0][0];
    return;
  }
  const double mean = 0.5 * (t.m[0][0] + t.m[1][1]);
  const double delta = 0.5 * (t.m[0][0] - t.m[1][1]);
  const double r = std::sqrt(delta * delta + t.m[0][1] * t.m[0][1]);
  lo = mean - r;
  hi = mean + r;
}

}  // namespace

double CoefficientField::scalar_at(const double* x) const {
  switch (kind_) {
    case CoefKind::constant:
      return value_;
    case CoefKind::gloria_lebris: {
      const double u = wrap(x[0], 1.0);
      const double v = wrap(x[1], 1.0);
      const double su = std::sin(kTwoPi * u), cu = std::cos(kTwoPi * u);
      const double sv = std::sin(kTwoPi * v), cv = std::cos(kTwoPi * v);
      return (2.0 + 1.8 * su) / (2.0 + 1.8 * cv) + (2.0 + sv) / (2.0 + 1.8 * cu);
    }
    case CoefKind::laminate_1d:
      return profile_(wrap(x[0], 1.0));
    case CoefKind::checkerboard: {
      // c1 on the two quarter cells where the wrapped coordinates share a
      // sign, c2 on the other two.
      const double u = wrap(x[0], 1.0);
      const double v = wrap(x[1], 1.0);
      return ((u >= 0.0) == (v >= 0.0)) ? c1_ : c2_;
    }
    case CoefKind::lognormal: {
      double g = 0.0;
      const std::size_t nm = logn_.wave.size();
      for (std::size_t m = 0; m < nm; ++m) {
        double arg = logn_.wave[m][0] * x[0] + logn_.phase[m];
        if (dim_ > 1) arg += logn_.wave[m][1] * x[1];
        g += std::cos(arg);
      }
      return std::exp(logn_.amplitude * g);
    }
    case CoefKind::custom:
      break;
  }
  return 0.0;  // unreachable
}

Tensor CoefficientField::eval(const double* x) const {
  if (kind_ == CoefKind::custom) {
    if (period_ > 0.0) {
      double w[2] = {wrap(x[0], period_), dim_ > 1 ? wrap(x[1], period_) : 0.0};
      return fn_(w);
    }
    return fn_(x);
  }
  return Tensor::identity(dim_, scalar_at(x));
}

CoefficientField CoefficientField::make_constant(int dim, double value) {
  if (value <= 0.0) throw std::invalid_argument("constant field value must be positive");
  CoefficientField f;
  f.kind_ = CoefKind::constant;
  f.dim_ = dim;
  f.period_ = 1.0;  // trivially periodic
  f.value_ = value;
  f.bounds_ = {value, value};
  return f;
}

CoefficientField CoefficientField::make_gloria_lebris() {
  CoefficientField f;
  f.kind_ = CoefKind::gloria_lebris;
  f.dim_ = 2;
  f.period_ = 1.0;
  ellipticity_bounds(f, 512, 1.0);
  return f;
}

CoefficientField CoefficientField::make_laminate_1d(std::function<double(double)> profile,
                                                    int dim) {
  CoefficientField f;
  f.kind_ = CoefKind::laminate_1d;
  f.dim_ = dim;
  f.period_ = 1.0;
  f.profile_ = std::move(profile);
  ellipticity_bounds(f, 2048, 1.0);
  return f;
}

CoefficientField CoefficientField::make_checkerboard(double c1, double c2) {
  if (c1 <= 0.0 || c2 <= 0.0)
    throw std::invalid_argument("checkerboard contrasts must be positive");
  CoefficientField f;
  f.kind_ = CoefKind::checkerboard;
  f.dim_ = 2;
  f.period_ = 1.0;
  f.c1_ = c1;
  f.c2_ = c2;
  f.bounds_ = {std::min(c1, c2), std::max(c1, c2)};
  return f;
}

CoefficientField CoefficientField::make_lognormal(std::uint64_t seed, int n_modes,
                                                  double sigma, double corr_len,
                                                  int dim) {
  if (n_modes < 1) throw std::invalid_argument("lognormal: n_modes must be >= 1");
  if (sigma < 0.0) throw std::invalid_argument("lognormal: sigma must be >= 0");
  if (corr_len <= 0.0) throw std::invalid_argument("lognormal: corr_len must be > 0");
  CoefficientField f;
  f.kind_ = CoefKind::lognormal;
  f.dim_ = dim;
  f.period_ = 0.0;  // non-periodic
  f.logn_.amplitude = sigma * std::sqrt(2.0 / static_cast<double>(n_modes));
  f.logn_.wave.resize(static_cast<std::size_t>(n_modes));
  f.logn_.phase.resize(static_cast<std::size_t>(n_modes));
  std::mt19937_64 gen(seed);
  const double kstd = 1.0 / corr_len;
  for (int m = 0; m < n_modes; ++m) {
    double z0, z1;
    gauss_pair(gen, z0, z1);
    f.logn_.wave[static_cast<std::size_t>(m)] = {kstd * z0, dim > 1 ? kstd * z1 : 0.0};
    f.logn_.phase[static_cast<std::size_t>(m)] = kTwoPi * uniform01(gen);
  }
  if (sigma == 0.0) f.bounds_ = {1.0, 1.0};
  return f;
}

CoefficientField CoefficientField::make_custom(int dim,
                                               std::function<Tensor(const double*)> fn,
                                               double period) {
  CoefficientField f;
  f.kind_ = CoefKind::custom;
  f.dim_ = dim;
  f.period_ = period;
  f.fn_ = std::move(fn);
  return f;
}

EllipticityBounds ellipticity_bounds(CoefficientField& field, int n_samples_per_dim,
                                     double box_edge) {
  if (n_samples_per_dim < 2)
    throw std::invalid_argument("ellipticity_bounds: need at least 2 samples per dim");
  const int ns = n_samples_per_dim;
  const double step = box_edge / static_cast<double>(ns - 1);
  double alpha = 0.0, beta = 0.0;
  bool first = true;
  const int nj = field.dim() > 1 ? ns : 1;
  for (int j = 0; j < nj; ++j) {
    for (int i = 0; i < ns; ++i) {
      const double x[2] = {-0.5 * box_edge + i * step, -0.5 * box_edge + j * step};
      double lo, hi;
      Tensor t = field.eval(x);
      eig_range(t, lo, hi);
      if (!(lo > 0.0)) {
        std::ostringstream msg;
        msg << "field not elliptic at x=(" << x[0];
        if (field.dim() > 1) msg << ", " << x[1];
        msg << ")";
        throw std::runtime_error(msg.str());
      }
      if (first || lo < alpha) alpha = lo;
      if (first || hi > beta) beta = hi;
      first = false;
    }
  }
  EllipticityBounds b{alpha, beta};
  field.set_bounds(b);
  return b;
}

}  // namespace homog
