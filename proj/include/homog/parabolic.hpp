#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "homog/sparse.hpp"

namespace homog {

// Time-integration controls for the parabolic cell problems.
struct TimeOptions {
  enum class Mode { fixed, adaptive };
  Mode mode = Mode::fixed;
  int n_steps = 0;        // fixed mode; 0 = auto max(64, ceil(8 T sqrt(rho))) capped at 4096
  double tol_t = 1e-6;    // adaptive local-error tolerance
  double damping = 0.05;  // Chebyshev damping epsilon
  double grading = 3.0;   // fixed-mode node grading t_k = T (k/n)^grading
};

// Smallest stage count s >= 2 with dt*rho within the damped second-order
// Chebyshev stability interval 0.653 s^2.
int select_stages(double dt_times_rho);

// Default fixed-mode step count: max(64, ceil(8 T sqrt(rho))), capped at 4096
// and rounded up to even so composite Simpson pairs up.
int default_step_count(double T, double rho);

struct HeatStats {
  std::int64_t matvecs = 0;
  int steps = 0;     // accepted
  int rejected = 0;  // adaptive mode only
  int max_stages = 0;
  double max_energy_ratio = 0.0;  // max over steps of ||u+||_M / ||u||_M
  bool energy_monotone = true;    // ratio <= 1 + 1e-10 on every accepted step
};

// One RKC2 step of u' = -M^{-1} A u for a block of states (shared
// coefficients, one matvec per stage per state).  Entries flagged in fixed
// are pinned to zero.  Throws NumericalError on non-finite results.
void rkc2_step(const CsrMatrix& A, const std::vector<double>& inv_mass,
               const std::vector<int>& fixed_list, std::vector<std::vector<double>>& U, double dt,
               int stages, double damping, std::int64_t* matvecs);

// Called at t = 0 and after every accepted step.
using HeatObserver = std::function<void(double t, const std::vector<std::vector<double>>& U)>;

// Advance all states in U from t=0 to t=T.  rho is a spectral-radius upper
// bound for M^{-1}A (see estimate_spectral_radius).  In fixed mode the node
// set is the graded schedule; in adaptive mode steps are chosen by
// step-doubling against opts.tol_t.  The observer sees every accepted node.
HeatStats integrate_heat(const CsrMatrix& A, const std::vector<double>& lumped_mass,
                         const std::vector<std::uint8_t>& fixed,
                         std::vector<std::vector<double>>& U, double T, double rho,
                         const TimeOptions& opts, const HeatObserver& observer = {});

}  // namespace homog
