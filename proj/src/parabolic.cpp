#include "homog/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "homog/errors.hpp"
#include "homog/kernels.hpp"
#include "homog/quadrature.hpp"

namespace homog {

int select_stages(double dt_times_rho) {
  if (!(dt_times_rho > 0.0)) return 2;
  int s = std::max(2, static_cast<int>(std::ceil(std::sqrt(dt_times_rho / 0.653))));
  while (0.653 * static_cast<double>(s) * static_cast<double>(s) < dt_times_rho) ++s;
  return s;
}

int default_step_count(double T, double rho) {
  double raw = std::ceil(8.0 * T * std::sqrt(std::max(rho, 0.0)));
  if (!(raw > 64.0)) raw = 64.0;
  if (raw > 4096.0) raw = 4096.0;
  int n = static_cast<int>(raw);
  if (n % 2 != 0) ++n;
  return n;
}

namespace {

struct Rkc2Coeffs {
  double w0 = 0.0, w1 = 0.0, mu1t = 0.0;
  std::vector<double> T, b;  // Chebyshev values and b_j, index 0..s
};

Rkc2Coeffs rkc2_coefficients(int s, double eps) {
  Rkc2Coeffs c;
  const double w0 = 1.0 + eps / (static_cast<double>(s) * static_cast<double>(s));
  c.w0 = w0;
  c.T.assign(static_cast<std::size_t>(s) + 1, 0.0);
  std::vector<double> dT(static_cast<std::size_t>(s) + 1, 0.0);
  std::vector<double> ddT(static_cast<std::size_t>(s) + 1, 0.0);
  c.T[0] = 1.0;
  c.T[1] = w0;
  dT[1] = 1.0;
  for (int j = 2; j <= s; ++j) {
    c.T[j] = 2.0 * w0 * c.T[j - 1] - c.T[j - 2];
    dT[j] = 2.0 * c.T[j - 1] + 2.0 * w0 * dT[j - 1] - dT[j - 2];
    ddT[j] = 4.0 * dT[j - 1] + 2.0 * w0 * ddT[j - 1] - ddT[j - 2];
  }
  c.w1 = dT[s] / ddT[s];
  c.b.assign(static_cast<std::size_t>(s) + 1, 0.0);
  for (int j = 2; j <= s; ++j) c.b[j] = ddT[j] / (dT[j] * dT[j]);
  c.b[0] = c.b[1] = c.b[2];
  c.mu1t = c.b[1] * c.w1;
  return c;
}

}  // namespace

void rkc2_step(const CsrMatrix& A, const std::vector<double>& inv_mass,
               const std::vector<int>& fixed_list, std::vector<std::vector<double>>& U, double dt,
               int stages, double damping, std::int64_t* matvecs) {
  const std::size_t nv = U.size();
  if (nv == 0) return;
  const std::size_t n = U[0].size();
  const Rkc2Coeffs c = rkc2_coefficients(stages, damping);

  std::vector<double> Ay(n), f1(n);
  auto rhs = [&](const std::vector<double>& y, std::vector<double>& out) {
    A.multiply(y.data(), Ay.data());
    if (matvecs) ++*matvecs;
    kern::dscale(-1.0, inv_mass.data(), Ay.data(), out.data(), n);
    for (int i : fixed_list) out[static_cast<std::size_t>(i)] = 0.0;
  };

  // per-state buffers: initial value, F(initial value), two rotating stages
  std::vector<std::vector<double>> u0(U);
  std::vector<std::vector<double>> f0(nv), yjm1(nv), yjm2(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    f0[v].assign(n, 0.0);
    rhs(u0[v], f0[v]);
    yjm2[v] = u0[v];
    yjm1[v] = u0[v];
    kern::axpy(c.mu1t * dt, f0[v].data(), yjm1[v].data(), n);
  }

  for (int j = 2; j <= stages; ++j) {
    const double bj = c.b[j], bjm1 = c.b[j - 1], bjm2 = c.b[j - 2];
    const double mu = 2.0 * bj * c.w0 / bjm1;
    const double nu = -bj / bjm2;
    const double mut = 2.0 * bj * c.w1 / bjm1;
    const double ajm1 = 1.0 - bjm1 * c.T[j - 1];
    const double gt = -ajm1 * mut;
    const double c0 = 1.0 - mu - nu;
    for (std::size_t v = 0; v < nv; ++v) {
      rhs(yjm1[v], f1);
      kern::stage5(yjm2[v].data(), n, c0, u0[v].data(), mu, yjm1[v].data(), nu, yjm2[v].data(),
                   mut * dt, f1.data(), gt * dt, f0[v].data());
      yjm2[v].swap(yjm1[v]);  // yjm1 now holds Y_j
    }
  }

  for (std::size_t v = 0; v < nv; ++v) {
    for (int i : fixed_list) yjm1[v][static_cast<std::size_t>(i)] = 0.0;
    const double check = kern::dot(yjm1[v].data(), yjm1[v].data(), n);
    if (!std::isfinite(check))
      throw NumericalError("time step diverged (stage count too low)");
    U[v].swap(yjm1[v]);
  }
}

HeatStats integrate_heat(const CsrMatrix& A, const std::vector<double>& lumped_mass,
                         const std::vector<std::uint8_t>& fixed,
                         std::vector<std::vector<double>>& U, double T, double rho,
                         const TimeOptions& opts, const HeatObserver& observer) {
  HeatStats stats;
  const std::size_t nv = U.size();
  const std::size_t n = lumped_mass.size();

  std::vector<double> inv_mass(n);
  for (std::size_t i = 0; i < n; ++i) inv_mass[i] = 1.0 / lumped_mass[i];
  std::vector<int> fixed_list;
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (fixed[i]) fixed_list.push_back(static_cast<int>(i));
  for (std::size_t v = 0; v < nv; ++v)
    for (int i : fixed_list) U[v][static_cast<std::size_t>(i)] = 0.0;

  if (observer) observer(0.0, U);
  if (!(T > 0.0)) return stats;

  auto m_norm2 = [&](const std::vector<double>& y) {
    return kern::wdot(lumped_mass.data(), y.data(), y.data(), n);
  };
  std::vector<double> energy(nv);
  for (std::size_t v = 0; v < nv; ++v) energy[v] = m_norm2(U[v]);

  auto note_step = [&](double t_next, int stages_used) {
    stats.max_stages = std::max(stats.max_stages, stages_used);
    for (std::size_t v = 0; v < nv; ++v) {
      const double e_new = m_norm2(U[v]);
      if (energy[v] > 0.0) {
        const double ratio = std::sqrt(e_new / energy[v]);
        stats.max_energy_ratio = std::max(stats.max_energy_ratio, ratio);
        if (ratio > 1.0 + 1e-10) stats.energy_monotone = false;
      }
      energy[v] = e_new;
    }
    ++stats.steps;
    if (observer) observer(t_next, U);
  };

  if (opts.mode == TimeOptions::Mode::fixed) {
    int nt = opts.n_steps > 0 ? opts.n_steps : default_step_count(T, rho);
    if (nt % 2 != 0) ++nt;  // composite Simpson pairs nodes
    const std::vector<double> t = graded_schedule(T, nt, opts.grading);
    for (int k = 0; k < nt; ++k) {
      const double dt = t[static_cast<std::size_t>(k) + 1] - t[static_cast<std::size_t>(k)];
      const int s = select_stages(dt * rho);
      rkc2_step(A, inv_mass, fixed_list, U, dt, s, opts.damping, &stats.matvecs);
      note_step(t[static_cast<std::size_t>(k) + 1], s);
    }
    return stats;
  }

  // adaptive: step doubling, accept the two-half-steps solution
  std::vector<double> denom(nv);
  for (std::size_t v = 0; v < nv; ++v) denom[v] = 3.0 * std::max(std::sqrt(energy[v]), 1e-300);
  double t = 0.0;
  double dt = std::min(T, 1.0 / std::max(rho, 1e-30));
  std::vector<std::vector<double>> y_full, y_half;
  std::vector<double> diff(n);
  while (t < T * (1.0 - 1e-12)) {
    dt = std::min(dt, T - t);
    y_full = U;
    rkc2_step(A, inv_mass, fixed_list, y_full, dt, select_stages(dt * rho), opts.damping,
              &stats.matvecs);
    y_half = U;
    const int s_half = select_stages(0.5 * dt * rho);
    rkc2_step(A, inv_mass, fixed_list, y_half, 0.5 * dt, s_half, opts.damping, &stats.matvecs);
    rkc2_step(A, inv_mass, fixed_list, y_half, 0.5 * dt, s_half, opts.damping, &stats.matvecs);
    double err = 0.0;
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t i = 0; i < n; ++i) diff[i] = y_full[v][i] - y_half[v][i];
      err = std::max(err, std::sqrt(m_norm2(diff)) / denom[v]);
    }
    const bool accept = err <= opts.tol_t;
    if (accept) {
      for (std::size_t v = 0; v < nv; ++v) U[v].swap(y_half[v]);
      t += dt;
      note_step(t, s_half);
    } else {
      ++stats.rejected;
    }
    const double factor =
        err > 0.0 ? std::clamp(0.8 * std::cbrt(opts.tol_t / err), 0.1, 2.0) : 2.0;
    dt *= factor;
    if (dt < 1e-14 * T) throw NumericalError("adaptive time step underflow");
  }
  return stats;
}

}  // namespace homog
