#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "homog/coefficients.hpp"
#include "homog/linsolve.hpp"
#include "homog/parabolic.hpp"
#include "homog/tensor.hpp"

namespace homog {

enum class Method { parabolic, elliptic_standard, elliptic_regularized, periodic_reference };

const char* method_name(Method m);
Method parse_method(const std::string& name);  // throws std::invalid_argument

// Practical parameter recipe: L = k_o R, lambda0_hat = alpha pi^2 / diam_K^2,
// c_hat = 1/(4 beta), k_T = sqrt(c_hat / (2 lambda0_hat)), T = k_T (R - L).
// With diam_K = sqrt(2) this is T = (R - L) / (2 pi sqrt(alpha beta)).
struct ParameterChoice {
  double R = 0.0, L = 0.0, T = 0.0;
  double k_o = 0.0, k_T = 0.0;
  double lambda0_hat = 0.0, c_hat = 0.0;
  std::vector<std::string> warnings;  // admissibility notes; never fatal
};

ParameterChoice select_parameters(double R, double k_o, double alpha, double beta, double diam_K);

struct UpscaleOptions {
  Method method = Method::parabolic;
  double R = 4.0;
  double k_o = 0.5;
  int q = 1;
  int n_per_cell = 32;
  double L_override = 0.0;  // > 0 replaces the selected L
  double T_override = 0.0;  // > 0 replaces the selected T (parabolic)
  double t_reg = 0.0;       // regularized method; 0 = (R-L)^2
  TimeOptions time;
  SolveOptions solver;
};

struct UpscaleResult {
  Method method = Method::parabolic;
  Tensor a0;
  double R = 0.0, L = 0.0, T = 0.0, k_o = 0.0, h = 0.0;
  int q = 0;
  int n_steps = 0;  // accepted time steps (0 for elliptic methods)
  std::int64_t dofs = 0;
  std::int64_t matvecs = 0;
  double walltime_ms = 0.0;
  std::vector<std::string> warnings;
  // parabolic diagnostics
  Tensor filtered_mean;            // filtered average of a (the uncorrected term)
  bool energy_monotone = true;     // discrete energy non-increasing at every step
  double max_energy_ratio = 0.0;
};

// Dispatch on opts.method.  The coefficient field must carry ellipticity
// bounds (factories set them; estimate with ellipticity_bounds otherwise).
UpscaleResult upscale(const CoefficientField& field, const UpscaleOptions& opts);

// One shared time integration evaluated against several filter orders; the
// states u^i do not depend on q, so a whole q-sweep costs one run.  Returns
// one result per entry of qs (each carrying the full run cost).
std::vector<UpscaleResult> upscale_parabolic_multi(const CoefficientField& field,
                                                   const UpscaleOptions& opts,
                                                   const std::vector<int>& qs);

// Same sharing for the elliptic variants: the correctors do not depend on q,
// only the averaging filter does.  opts.method picks standard or regularized.
std::vector<UpscaleResult> upscale_elliptic_multi(const CoefficientField& field,
                                                  const UpscaleOptions& opts,
                                                  const std::vector<int>& qs);

// Periodic cell problems on the unit cell, projected CG, unfiltered average.
UpscaleResult periodic_reference_tensor(const CoefficientField& field, int n_per_cell,
                                        const SolveOptions& solver = {.tol = 1e-12});

// (∫_0^1 profile^{-1})^{-1}, composite Simpson refined to 1e-12.
double harmonic_mean_1d(const std::function<double(double)>& profile, int n_quad = 64);

struct EquivalenceReport {
  double r1 = 0.0;  // corrector vs time-integrated state, discrete H1
  double r2 = 0.0;  // energy vs correlation integral
  double decay_ratio = 0.0;  // max_i ||u^i(T_long)||_M / ||u^i(0)||_M
  int steps = 0;
  std::int64_t matvecs = 0;
};

// Validates the identities chi = ∫_0^∞ u dt and (1/2) chi_i . A chi_j =
// ∫_0^∞ ∫ u^i u^j, truncated at T_long, with the unfiltered mass on all of
// K_R.  Requires the trace to decay below 1e-8 of its initial value, else
// throws NumericalError("increase T_long").
EquivalenceReport equivalence_check(const CoefficientField& field, double R, int n_per_cell,
                                    double T_long, const TimeOptions& time = {},
                                    const SolveOptions& solver = {});

}  // namespace homog
