#pragma once

#include <functional>

namespace homog {

// Order-q averaging kernel on the cube K_L, tensor product of the 1D kernel
// mu(x) = c_q (1 - 4x^2)^q on [-1/2, 1/2]:
//
//   mu_L(x) = L^{-d} prod_i mu(x_i / L)
//
// mu has unit mass and, for q >= 1, derivatives up to order q-1 vanishing at
// the endpoints; filtered averages of 1-periodic fields then converge at rate
// L^{-(q+1)}.
struct FilterSpec {
  int q = 1;
  double L = 1.0;
  int dim = 2;
  double c_q = 1.5;  // 1D normalization for this q
};

// c_q = 2 Gamma(q + 3/2) / (sqrt(pi) q!), evaluated by the exact rational
// recurrence c_0 = 1, c_q = c_{q-1} (2q+1)/(2q).
double filter_normalization(int q);

FilterSpec make_filter(int q, double L, int dim);

// mu_L(x); 0 outside K_L.
double filter_weight(const FilterSpec& spec, const double* x);

// |∫_{K_L} f mu_L - ∫_0^1 f| for a smooth 1-periodic f, with both integrals
// refined (composite Simpson, interval doubling) until stable to ~1e-13.
double averaging_error_probe(const std::function<double(double)>& f, int q, double L);

}  // namespace homog
