#include "homog/linsolve.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "homog/kernels.hpp"

namespace homog {

namespace {

void project_mean(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  const double mean = s / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

}  // namespace

SolveResult cg_solve(const CsrMatrix& A, const std::vector<double>& b, std::vector<double>& x,
                     const SolveOptions& opts) {
  const std::size_t n = static_cast<std::size_t>(A.n);
  if (b.size() != n) throw std::invalid_argument("cg: rhs size does not match matrix");
  if (x.size() != n) x.assign(n, 0.0);

  SolveResult res;
  const double bnorm = std::sqrt(kern::dot(b.data(), b.data(), n));
  if (bnorm == 0.0) {
    x.assign(n, 0.0);
    res.converged = true;
    return res;
  }

  std::vector<double> invdiag;
  if (opts.jacobi) {
    invdiag.resize(n);
    for (int i = 0; i < A.n; ++i) {
      const double d = A.diag(i);
      if (d <= 0.0) throw std::runtime_error("cg: nonpositive diagonal, jacobi unusable");
      invdiag[static_cast<std::size_t>(i)] = 1.0 / d;
    }
  }

  std::vector<double> r(n), z(n), p(n), Ap(n);
  if (opts.project_zero_mean) project_mean(x);
  A.multiply(x.data(), Ap.data());
  ++res.matvecs;
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - Ap[i];
  if (opts.project_zero_mean) project_mean(r);

  auto precondition = [&](const std::vector<double>& in, std::vector<double>& out) {
    if (opts.jacobi)
      kern::dscale(1.0, invdiag.data(), in.data(), out.data(), n);
    else
      out = in;
    if (opts.project_zero_mean) project_mean(out);
  };

  precondition(r, z);
  p = z;
  double rz = kern::dot(r.data(), z.data(), n);
  double rnorm = std::sqrt(kern::dot(r.data(), r.data(), n));
  res.residual = rnorm / bnorm;
  if (res.residual <= opts.tol) {
    res.converged = true;
    return res;
  }

  const int max_iter =
      opts.max_iter > 0 ? opts.max_iter
                        : static_cast<int>(20.0 * std::sqrt(static_cast<double>(n))) + 1;
  for (int it = 0; it < max_iter; ++it) {
    A.multiply(p.data(), Ap.data());
    ++res.matvecs;
    const double pAp = kern::dot(p.data(), Ap.data(), n);
    if (!(pAp > 0.0)) throw std::runtime_error("cg: matrix is not positive definite");
    const double alpha = rz / pAp;
    kern::axpy(alpha, p.data(), x.data(), n);
    kern::axpy(-alpha, Ap.data(), r.data(), n);
    if (opts.project_zero_mean) project_mean(r);
    rnorm = std::sqrt(kern::dot(r.data(), r.data(), n));
    res.iterations = it + 1;
    res.residual = rnorm / bnorm;
    if (res.residual <= opts.tol) {
      res.converged = true;
      return res;
    }
    precondition(r, z);
    const double rz_next = kern::dot(r.data(), z.data(), n);
    const double beta = rz_next / rz;
    rz = rz_next;
    kern::axpby(1.0, z.data(), beta, p.data(), n);
  }
  return res;
}

double estimate_spectral_radius(const CsrMatrix& A, const std::vector<double>& lumped_mass,
                                const std::vector<std::uint8_t>* skip, std::int64_t* matvecs) {
  const std::size_t n = static_cast<std::size_t>(A.n);
  if (lumped_mass.size() != n) throw std::invalid_argument("rho: mass size does not match matrix");

  double gersh = 0.0;
  for (int i = 0; i < A.n; ++i) {
    if (skip && (*skip)[static_cast<std::size_t>(i)]) continue;
    double row = 0.0;
    for (int k = A.row_ptr[static_cast<std::size_t>(i)];
         k < A.row_ptr[static_cast<std::size_t>(i) + 1]; ++k)
      row += std::fabs(A.val[static_cast<std::size_t>(k)]);
    const double m = lumped_mass[static_cast<std::size_t>(i)];
    if (m > 0.0) gersh = std::max(gersh, row / m);
  }

  std::mt19937_64 gen(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n), w(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = (skip && (*skip)[i]) ? 0.0 : dist(gen);
  double lambda = 0.0;
  for (int it = 0; it < 20; ++it) {
    A.multiply(v.data(), w.data());
    if (matvecs) ++*matvecs;
    for (std::size_t i = 0; i < n; ++i)
      w[i] = (skip && (*skip)[i]) ? 0.0 : w[i] / lumped_mass[i];
    const double norm = std::sqrt(kern::dot(w.data(), w.data(), n));
    if (norm == 0.0) return gersh;  // start vector in the kernel; fall back
    lambda = norm / std::sqrt(kern::dot(v.data(), v.data(), n));
    kern::scal(1.0 / norm, w.data(), n);
    v.swap(w);
  }
  return std::max(gersh, 1.05 * lambda);
}

}  // namespace homog
