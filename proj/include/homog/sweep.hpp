#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homog/coefficients.hpp"
#include "homog/tensor.hpp"
#include "homog/upscale.hpp"

namespace homog {

// One row of a convergence/cost study.
struct SweepRecord {
  std::string method;
  double R = 0.0, L = 0.0, T = 0.0;
  int q = 0;
  double k_o = 0.0, h = 0.0;
  int nt = 0;  // accepted time steps (0 for elliptic methods)
  Tensor a0;   // d=1 stores the scalar in a11
  double err_fro = 0.0;
  std::int64_t dofs = 0;
  std::int64_t matvecs = 0;
  double walltime_ms = 0.0;
  std::uint64_t seed = 0;
  bool failed = false;  // err_fro is NaN; note carries the reason
  std::string note;
};

struct SweepConfig {
  std::vector<Method> methods;
  std::vector<double> Rs;  // >= 1, strictly increasing
  std::vector<int> qs;
  double k_o = 0.5;
  int n_per_cell = 32;
  TimeOptions time;
  SolveOptions solver;
  double t_reg = 0.0;
  enum class Reference { periodic, largest_R } reference = Reference::periodic;
  std::uint64_t seed = 0;  // recorded in every row (coefficient realization id)
};

// Runs every (method, q, R) combination, computes err_fro against the
// configured reference, and returns rows sorted by (method, q, R).  Per-point
// failures become NaN rows; configuration errors throw.
std::vector<SweepRecord> run_sweep(const CoefficientField& field, const SweepConfig& config);

// Least-squares slope of log(err_fro) against log(R) over the rows whose
// err_fro lies in [lo, hi].  Throws NumericalError("insufficient points in
// window") with fewer than 3 usable rows.
double fit_slope(const std::vector<SweepRecord>& records, double lo, double hi);

// Cost study: per (method, q) group and per tolerance, the smallest swept R
// with err_fro <= tol.
struct BenchRow {
  std::string method;
  int q = 0;
  double tol = 0.0;
  bool reachable = false;
  double R = 0.0;
  std::int64_t dofs = 0;
  std::int64_t matvecs = 0;
  double walltime_ms = 0.0;
};

std::vector<BenchRow> bench(const std::vector<SweepRecord>& records,
                            const std::vector<double>& tolerances);

// Fixed-width text rendering of a bench table.
std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace homog
