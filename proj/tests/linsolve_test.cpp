#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "homog/coefficients.hpp"
#include "homog/fem.hpp"
#include "homog/linsolve.hpp"
#include "homog/mesh.hpp"
#include "homog/sparse.hpp"

using namespace homog;

namespace {

CsrMatrix dense2x2(double a, double b, double c, double d) {
  CsrBuilder bld(2);
  bld.add(0, 0, a);
  bld.add(0, 1, b);
  bld.add(1, 0, c);
  bld.add(1, 1, d);
  return bld.finalize();
}

}  // namespace

TEST_CASE("linsolve: 2x2 SPD system solves to the closed form") {
  // A = [[4,1],[1,3]], b = [1,2]  =>  x = (1/11, 7/11)
  CsrMatrix A = dense2x2(4.0, 1.0, 1.0, 3.0);
  std::vector<double> b = {1.0, 2.0};
  std::vector<double> x(2, 0.0);
  SolveResult r = cg_solve(A, b, x, {.tol = 1e-14});
  CHECK(r.converged);
  CHECK(r.iterations <= 2);
  CHECK(x[0] == doctest::Approx(1.0 / 11.0).epsilon(1e-12));
  CHECK(x[1] == doctest::Approx(7.0 / 11.0).epsilon(1e-12));
  CHECK(r.residual <= 1e-13);
  CHECK(r.matvecs >= r.iterations);
}

TEST_CASE("linsolve: zero right-hand side returns zero immediately") {
  CsrMatrix A = dense2x2(4.0, 1.0, 1.0, 3.0);
  std::vector<double> b = {0.0, 0.0};
  std::vector<double> x = {5.0, -3.0};  // nonzero guess must be overwritten
  SolveResult r = cg_solve(A, b, x);
  CHECK(r.converged);
  CHECK(r.iterations == 0);
  CHECK(x[0] == 0.0);
  CHECK(x[1] == 0.0);
}

TEST_CASE("linsolve: indefinite matrix is rejected") {
  CsrMatrix A = dense2x2(-1.0, 0.0, 0.0, -1.0);
  std::vector<double> b = {1.0, 1.0};
  std::vector<double> x(2, 0.0);
  CHECK_THROWS_AS(cg_solve(A, b, x, {.jacobi = false}), std::runtime_error);
}

TEST_CASE("linsolve: Dirichlet Laplacian system reproduces a manufactured solution") {
  CoefficientField field = CoefficientField::make_constant(2, 1.0);
  StructuredMesh mesh = build_mesh(2.0, 16, 2);
  CsrMatrix A = assemble_stiffness(mesh, field);
  std::vector<std::uint8_t> fixed = dirichlet_mask(mesh);
  apply_dirichlet(A, fixed);

  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x_true(static_cast<std::size_t>(A.n));
  for (std::size_t i = 0; i < x_true.size(); ++i)
    x_true[i] = fixed[i] ? 0.0 : u(gen);
  std::vector<double> b(x_true.size(), 0.0);
  A.multiply(x_true.data(), b.data());

  std::vector<double> x(x_true.size(), 0.0);
  SolveResult r = cg_solve(A, b, x, {.tol = 1e-12});
  CHECK(r.converged);
  double err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) err = std::max(err, std::fabs(x[i] - x_true[i]));
  CHECK(err <= 1e-8);
}

TEST_CASE("linsolve: projected CG handles the singular periodic system") {
  CoefficientField field = CoefficientField::make_gloria_lebris();
  StructuredMesh cell = build_periodic_cell_mesh(16, 2);
  CsrMatrix A = assemble_stiffness(cell, field);

  // zero-mean manufactured solution; b = A x is then range-compatible
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x_true(static_cast<std::size_t>(A.n));
  double mean = 0.0;
  for (double& v : x_true) mean += (v = u(gen));
  mean /= static_cast<double>(x_true.size());
  for (double& v : x_true) v -= mean;
  std::vector<double> b(x_true.size(), 0.0);
  A.multiply(x_true.data(), b.data());

  std::vector<double> x(x_true.size(), 0.0);
  SolveResult r = cg_solve(A, b, x, {.tol = 1e-12, .project_zero_mean = true});
  CHECK(r.converged);
  double err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) err = std::max(err, std::fabs(x[i] - x_true[i]));
  CHECK(err <= 1e-7);
}

TEST_CASE("linsolve: iteration cap reports non-convergence honestly") {
  CoefficientField field = CoefficientField::make_constant(2, 1.0);
  StructuredMesh mesh = build_mesh(4.0, 16, 2);
  CsrMatrix A = assemble_stiffness(mesh, field);
  std::vector<std::uint8_t> fixed = dirichlet_mask(mesh);
  apply_dirichlet(A, fixed);
  std::vector<double> b(static_cast<std::size_t>(A.n), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!fixed[i]) b[i] = 1.0;
  std::vector<double> x(b.size(), 0.0);
  SolveResult r = cg_solve(A, b, x, {.tol = 1e-14, .max_iter = 2});
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 2);
  CHECK(r.residual > 1e-14);
}

TEST_CASE("linsolve: spectral radius estimate brackets the 1D model problem") {
  // a = 1, h = 1/64: interior Gershgorin row bound of M^{-1}A is 4/h^2 = 16384
  CoefficientField field = CoefficientField::make_constant(1, 1.0);
  StructuredMesh mesh = build_mesh(1.0, 64, 1);
  CsrMatrix A = assemble_stiffness(mesh, field);
  std::vector<std::uint8_t> fixed = dirichlet_mask(mesh);
  apply_dirichlet(A, fixed);
  std::vector<double> M = assemble_lumped_mass(mesh);
  std::int64_t mv = 0;
  const double rho = estimate_spectral_radius(A, M, &fixed, &mv);
  CHECK(rho >= 16384.0);
  CHECK(rho <= 1.05 * 16384.0);
  CHECK(mv == 20);

  // the true maximal eigenvalue (4/h^2) sin^2(pi m h / 2) <= rho
  const double h = 1.0 / 64.0;
  const double lam_max = 4.0 / (h * h) *
                         std::pow(std::sin(0.5 * std::numbers::pi * (64 - 1) * h), 2.0);
  CHECK(rho >= lam_max);
}

TEST_CASE("linsolve: spectral radius of a diagonal matrix") {
  CsrBuilder bld(5);
  for (int i = 0; i < 5; ++i) bld.add(i, i, static_cast<double>(i + 1));
  CsrMatrix A = bld.finalize();
  std::vector<double> M(5, 1.0);
  const double rho = estimate_spectral_radius(A, M);
  CHECK(rho >= 5.0);
  CHECK(rho <= 5.0 * 1.05 + 1e-12);
}
