#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "homog/tensor.hpp"

namespace homog {

enum class CoefKind {
  constant,
  gloria_lebris,
  laminate_1d,
  checkerboard,
  lognormal,
  custom,
};

struct EllipticityBounds {
  double alpha = 0.0;  // lower eigenvalue bound
  double beta = 0.0;   // upper eigenvalue bound
  bool known() const { return beta > 0.0; }
};

// A symmetric, uniformly elliptic coefficient field a(x) on R^d (d = 1 or 2).
// Periodic fields wrap coordinates to the canonical cell before evaluating,
// so a(x + period e_k) == a(x) up to the representability of x + period.
class CoefficientField {
 public:
  CoefficientField() = default;

  int dim() const { return dim_; }
  CoefKind kind() const { return kind_; }
  bool periodic() const { return period_ > 0.0; }
  double period() const { return period_; }
  const EllipticityBounds& bounds() const { return bounds_; }
  void set_bounds(const EllipticityBounds& b) { bounds_ = b; }

  Tensor eval(const double* x) const;

  // ------- factories -------
  static CoefficientField make_constant(int dim, double value);
  static CoefficientField make_gloria_lebris();
  static CoefficientField make_laminate_1d(std::function<double(double)> profile,
                                           int dim = 2);
  static CoefficientField make_checkerboard(double c1, double c2);
  static CoefficientField make_lognormal(std::uint64_t seed, int n_modes,
                                         double sigma, double corr_len, int dim = 2);
  static CoefficientField make_custom(int dim, std::function<Tensor(const double*)> f,
                                      double period = 0.0);

  // Lognormal parameter record (empty otherwise); exposed so determinism can
  // be checked bitwise.
  struct LognormalParams {
    double amplitude = 0.0;                   // sigma * sqrt(2/n_modes)
    std::vector<std::array<double, 2>> wave;  // k_m (second entry unused in 1D)
    std::vector<double> phase;                // phi_m
  };
  const LognormalParams& lognormal_params() const { return logn_; }

 private:
  double scalar_at(const double* x) const;  // isotropic kinds

  CoefKind kind_ = CoefKind::constant;
  int dim_ = 2;
  double period_ = 0.0;
  EllipticityBounds bounds_;
  double value_ = 1.0;                       // constant
  double c1_ = 1.0, c2_ = 1.0;               // checkerboard
  std::function<double(double)> profile_;    // laminate
  LognormalParams logn_;                     // lognormal
  std::function<Tensor(const double*)> fn_;  // custom
};

// Min/max eigenvalue extremes of a(x) sampled on an n_per_dim^d lattice over
// the centered cube of the given edge length; stores the result into the
// field.  Throws if a sampled eigenvalue is not positive.
EllipticityBounds ellipticity_bounds(CoefficientField& field, int n_samples_per_dim,
                                     double box_edge);

}  // namespace homog
