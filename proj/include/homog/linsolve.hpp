#pragma once

#include <cstdint>
#include <vector>

#include "homog/sparse.hpp"

namespace homog {

struct SolveOptions {
  double tol = 1e-10;           // relative residual ||b - Ax|| / ||b||
  int max_iter = 0;             // 0 => 20 * sqrt(n)
  bool jacobi = true;           // diagonal preconditioner
  bool project_zero_mean = false;  // for the singular periodic cell system
};

struct SolveResult {
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;        // final relative residual
  std::int64_t matvecs = 0;
};

// Preconditioned conjugate gradients for symmetric positive (semi-)definite
// systems.  x holds the initial guess on entry and the solution on exit.
// With project_zero_mean the iterates are kept orthogonal to constants, which
// handles the periodic cell matrix whose kernel is spanned by 1.
SolveResult cg_solve(const CsrMatrix& A, const std::vector<double>& b, std::vector<double>& x,
                     const SolveOptions& opts = {});

// Upper estimate of the spectral radius of M^{-1} A (lumped M): the larger of
// the Gershgorin row bound and a 20-step power iteration (inflated by 5%).
// Rows flagged in skip (Dirichlet rows) are excluded.  The power iteration
// start vector is drawn from a fixed-seed generator so the estimate is
// reproducible.  If matvecs is non-null the matvec count is added to it.
double estimate_spectral_radius(const CsrMatrix& A, const std::vector<double>& lumped_mass,
                                const std::vector<std::uint8_t>* skip = nullptr,
                                std::int64_t* matvecs = nullptr);

}  // namespace homog
