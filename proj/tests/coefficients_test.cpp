#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "homog/coefficients.hpp"

using namespace homog;

TEST_CASE("coefficients: constant field") {
  CoefficientField f = CoefficientField::make_constant(2, 3.5);
  CHECK(f.dim() == 2);
  CHECK(f.periodic());
  CHECK(f.bounds().known());
  CHECK(f.bounds().alpha == 3.5);
  CHECK(f.bounds().beta == 3.5);
  const double x[2] = {0.37, -12.9};
  Tensor t = f.eval(x);
  CHECK(t.m[0][0] == 3.5);
  CHECK(t.m[1][1] == 3.5);
  CHECK(t.m[0][1] == 0.0);
  CHECK_THROWS_AS(CoefficientField::make_constant(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientField::make_constant(2, -1.0), std::invalid_argument);
}

TEST_CASE("coefficients: trigonometric periodic field values and periodicity") {
  CoefficientField f = CoefficientField::make_gloria_lebris();
  CHECK(f.dim() == 2);
  CHECK(f.periodic());
  CHECK(f.period() == 1.0);
  CHECK(f.bounds().known());
  CHECK(f.bounds().alpha > 0.0);
  CHECK(f.bounds().beta > f.bounds().alpha);

  // value at the origin: (2+0)/(2+1.8) + (2+0)/(2+1.8) = 4/3.8
  const double origin[2] = {0.0, 0.0};
  CHECK(f.eval(origin).m[0][0] == doctest::Approx(4.0 / 3.8).epsilon(1e-14));

  // periodicity up to trig roundoff of the shifted argument
  for (double sx : {0.13, 0.41, 0.77}) {
    for (double sy : {0.29, 0.63}) {
      const double a[2] = {sx, sy};
      const double b[2] = {sx + 3.0, sy - 2.0};
      CHECK(f.eval(a).m[0][0] == doctest::Approx(f.eval(b).m[0][0]).epsilon(1e-13));
      CHECK(f.eval(a).m[1][1] == f.eval(a).m[0][0]);  // isotropic
    }
  }

  // bounds actually bound sampled values
  for (double sx : {0.05, 0.35, 0.65, 0.95}) {
    const double p[2] = {sx, 1.0 - sx};
    const double v = f.eval(p).m[0][0];
    CHECK(v >= f.bounds().alpha - 1e-12);
    CHECK(v <= f.bounds().beta + 1e-12);
  }
}

TEST_CASE("coefficients: laminate depends only on x1") {
  CoefficientField f = CoefficientField::make_laminate_1d(
      [](double x) { return 2.0 + std::sin(2.0 * std::numbers::pi * x); }, 2);
  CHECK(f.dim() == 2);
  CHECK(f.periodic());
  const double a[2] = {0.25, -3.1};
  const double b[2] = {0.25, 11.7};
  CHECK(f.eval(a).m[0][0] == f.eval(b).m[0][0]);
  CHECK(f.eval(a).m[0][0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(f.bounds().alpha == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(f.bounds().beta == doctest::Approx(3.0).epsilon(1e-5));

  CoefficientField g = CoefficientField::make_laminate_1d(
      [](double x) { return 2.0 + std::sin(2.0 * std::numbers::pi * x); }, 1);
  CHECK(g.dim() == 1);
  const double c[1] = {0.75};
  CHECK(g.eval(c).m[0][0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("coefficients: checkerboard phase layout") {
  CoefficientField f = CoefficientField::make_checkerboard(1.0, 4.0);
  CHECK(f.bounds().alpha == 1.0);
  CHECK(f.bounds().beta == 4.0);
  // wrapped coordinates in [-1/2,1/2); same sign -> c1, mixed signs -> c2
  const double p11[2] = {0.25, 0.25};
  const double p22[2] = {0.75, 0.75};  // wraps to (-0.25,-0.25)
  const double p12[2] = {0.25, 0.75};
  const double p21[2] = {0.75, 0.25};
  CHECK(f.eval(p11).m[0][0] == 1.0);
  CHECK(f.eval(p22).m[0][0] == 1.0);
  CHECK(f.eval(p12).m[0][0] == 4.0);
  CHECK(f.eval(p21).m[0][0] == 4.0);
  CHECK_THROWS_AS(CoefficientField::make_checkerboard(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("coefficients: lognormal determinism and seeding") {
  CoefficientField f1 = CoefficientField::make_lognormal(1, 64, 0.5, 0.5, 2);
  CoefficientField f2 = CoefficientField::make_lognormal(1, 64, 0.5, 0.5, 2);
  CoefficientField g = CoefficientField::make_lognormal(2, 64, 0.5, 0.5, 2);

  CHECK_FALSE(f1.periodic());
  CHECK_FALSE(f1.bounds().known());  // bounds unknown until sampled
  REQUIRE(f1.lognormal_params().wave.size() == 64);
  REQUIRE(f1.lognormal_params().phase.size() == 64);

  // identical seed -> bitwise identical realization
  for (std::size_t m = 0; m < 64; ++m) {
    CHECK(f1.lognormal_params().wave[m][0] == f2.lognormal_params().wave[m][0]);
    CHECK(f1.lognormal_params().wave[m][1] == f2.lognormal_params().wave[m][1]);
    CHECK(f1.lognormal_params().phase[m] == f2.lognormal_params().phase[m]);
  }
  const double x[2] = {1.3, -0.4};
  CHECK(f1.eval(x).m[0][0] == f2.eval(x).m[0][0]);
  CHECK(f1.eval(x).m[0][0] != g.eval(x).m[0][0]);
  CHECK(f1.eval(x).m[0][0] > 0.0);

  // sampling establishes usable bounds
  EllipticityBounds b = ellipticity_bounds(f1, 128, 4.0);
  CHECK(f1.bounds().known());
  CHECK(b.alpha > 0.0);
  CHECK(b.beta >= b.alpha);
  CHECK(f1.eval(x).m[0][0] >= 0.0);

  // sigma = 0 degenerates to the identity coefficient
  CoefficientField unit = CoefficientField::make_lognormal(9, 8, 0.0, 0.5, 2);
  CHECK(unit.bounds().alpha == 1.0);
  CHECK(unit.eval(x).m[0][0] == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(CoefficientField::make_lognormal(1, 0, 0.5, 0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientField::make_lognormal(1, 8, 0.5, 0.0, 2), std::invalid_argument);
}

TEST_CASE("coefficients: ellipticity sampling rejects indefinite fields") {
  CoefficientField bad = CoefficientField::make_custom(
      2,
      [](const double* x) {
        Tensor t = Tensor::identity(2, 1.0);
        if (x[0] > 0.4) t.m[0][0] = -1.0;  // loses positivity off-center
        return t;
      },
      0.0);
  CHECK_THROWS_AS(ellipticity_bounds(bad, 64, 2.0), std::runtime_error);

  CoefficientField aniso = CoefficientField::make_custom(
      2,
      [](const double*) {
        Tensor t(2);
        t.m[0][0] = 2.0;
        t.m[1][1] = 5.0;
        t.m[0][1] = t.m[1][0] = 1.0;
        return t;
      },
      1.0);
  EllipticityBounds b = ellipticity_bounds(aniso, 16, 1.0);
  // eigenvalues of [[2,1],[1,5]]: 3.5 -/+ sqrt(2.25+1)
  CHECK(b.alpha == doctest::Approx(3.5 - std::sqrt(3.25)).epsilon(1e-13));
  CHECK(b.beta == doctest::Approx(3.5 + std::sqrt(3.25)).epsilon(1e-13));
}
