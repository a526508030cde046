#include "homog/upscale.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "homog/errors.hpp"
#include "homog/fem.hpp"
#include "homog/filters.hpp"
#include "homog/kernels.hpp"
#include "homog/mesh.hpp"
#include "homog/quadrature.hpp"

namespace homog {

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const EllipticityBounds& require_bounds(const CoefficientField& field) {
  if (!field.bounds().known())
    throw std::invalid_argument(
        "coefficient field carries no ellipticity bounds; sample them with ellipticity_bounds() "
        "first");
  return field.bounds();
}

// Dirichlet problem pieces shared by the parabolic and elliptic methods.
struct BoxSystem {
  StructuredMesh mesh;
  CsrMatrix A;  // Dirichlet rows/columns cleared, unit diagonal
  std::vector<double> mass;
  std::vector<std::uint8_t> fixed;
  std::vector<std::vector<double>> b;  // one load per direction, boundary zeroed
};

BoxSystem build_box_system(const CoefficientField& field, double R, int n_per_cell) {
  BoxSystem sys;
  sys.mesh = build_mesh(R, n_per_cell, field.dim());
  sys.A = assemble_stiffness(sys.mesh, field);
  sys.mass = assemble_lumped_mass(sys.mesh);
  sys.fixed = dirichlet_mask(sys.mesh);
  apply_dirichlet(sys.A, sys.fixed);
  for (int dir = 0; dir < field.dim(); ++dir) {
    sys.b.push_back(assemble_load(sys.mesh, field, dir));
    auto& b = sys.b.back();
    for (std::size_t k = 0; k < b.size(); ++k)
      if (sys.fixed[k]) b[k] = 0.0;
  }
  return sys;
}

// chi_dir = A^{-1} b_dir with convergence enforcement
std::vector<double> solve_corrector(const BoxSystem& sys, int dir, const SolveOptions& solver,
                                    std::int64_t* matvecs) {
  std::vector<double> x(sys.b[static_cast<std::size_t>(dir)].size(), 0.0);
  const SolveResult r = cg_solve(sys.A, sys.b[static_cast<std::size_t>(dir)], x, solver);
  if (matvecs) *matvecs += r.matvecs;
  if (!r.converged)
    throw NumericalError("cg did not converge (relative residual " + format_value(r.residual) +
                         " after " + std::to_string(r.iterations) + " iterations)");
  return x;
}

// Nodal filtered averages of a: for each filter mass vector, the raw sums
// sum_k a(x_k) Mw_kk and sum_k Mw_kk.
struct FilteredMean {
  Tensor raw;
  double total = 0.0;
};

std::vector<FilteredMean> nodal_filtered_means(const StructuredMesh& mesh,
                                               const CoefficientField& field,
                                               const std::vector<std::vector<double>>& masses) {
  std::vector<FilteredMean> out(masses.size());
  for (auto& fm : out) fm.raw = Tensor(mesh.dim);
  auto visit = [&](std::int64_t k, const double* x) {
    bool needed = false;
    for (const auto& mw : masses)
      if (mw[static_cast<std::size_t>(k)] != 0.0) needed = true;
    if (!needed) return;
    const Tensor a = field.eval(x);
    for (std::size_t f = 0; f < masses.size(); ++f) {
      const double w = masses[f][static_cast<std::size_t>(k)];
      if (w == 0.0) continue;
      out[f].total += w;
      for (int i = 0; i < mesh.dim; ++i)
        for (int j = 0; j < mesh.dim; ++j) out[f].raw.m[i][j] += w * a.m[i][j];
    }
  };
  if (mesh.dim == 1) {
    for (int i = 0; i <= mesh.m; ++i) {
      const double x = mesh.coord(i);
      visit(mesh.node_id(i), &x);
    }
  } else {
    for (int j = 0; j <= mesh.m; ++j)
      for (int i = 0; i <= mesh.m; ++i) {
        const double x[2] = {mesh.coord(i), mesh.coord(j)};
        visit(mesh.node_id(i, j), x);
      }
  }
  return out;
}

void check_admissibility(const ParameterChoice& p, int dim, std::vector<std::string>& warnings) {
  const double R_tilde = std::floor(p.R - 0.5);
  const double window = (2.0 * p.c_hat / dim) * (R_tilde - p.L) * (R_tilde - p.L);
  if (!(p.T < window))
    warnings.push_back("T = " + format_value(p.T) + " >= (2c/d)(R~-L)^2 = " +
                       format_value(window) + ": outside the admissible horizon of the error bound");
  if (!(p.T < p.R - p.L))
    warnings.push_back("T = " + format_value(p.T) + " >= R - L = " + format_value(p.R - p.L) +
                       ": outside the admissible horizon of the error bound");
}

ParameterChoice choose(const CoefficientField& field, const UpscaleOptions& opts) {
  const EllipticityBounds& eb = require_bounds(field);
  ParameterChoice p = select_parameters(opts.R, opts.k_o, eb.alpha, eb.beta,
                                        std::sqrt(static_cast<double>(field.dim())));
  if (opts.L_override > 0.0) p.L = opts.L_override;
  if (opts.T_override > 0.0) p.T = opts.T_override;
  return p;
}

void stamp_common(UpscaleResult& r, const UpscaleOptions& opts, const ParameterChoice& p,
                  const StructuredMesh& mesh) {
  r.method = opts.method;
  r.R = mesh.R;
  r.L = p.L;
  r.T = p.T;
  r.k_o = opts.k_o;
  r.q = opts.q;
  r.h = mesh.h;
  r.dofs = mesh.num_nodes();
  r.warnings = p.warnings;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::parabolic: return "parabolic";
    case Method::elliptic_standard: return "elliptic_standard";
    case Method::elliptic_regularized: return "elliptic_regularized";
    case Method::periodic_reference: return "periodic_reference";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "parabolic") return Method::parabolic;
  if (name == "elliptic_standard") return Method::elliptic_standard;
  if (name == "elliptic_regularized") return Method::elliptic_regularized;
  if (name == "periodic_reference") return Method::periodic_reference;
  throw std::invalid_argument("unknown method '" + name + "'");
}

ParameterChoice select_parameters(double R, double k_o, double alpha, double beta, double diam_K) {
  if (!(k_o > 0.0) || !(k_o < 1.0)) throw std::invalid_argument("k_o must lie in (0,1)");
  if (!(R > 0.0)) throw std::invalid_argument("R must be positive");
  if (!(alpha > 0.0) || !(beta >= alpha))
    throw std::invalid_argument("ellipticity bounds must satisfy 0 < alpha <= beta");
  if (!(diam_K > 0.0)) throw std::invalid_argument("diam_K must be positive");
  ParameterChoice p;
  p.R = R;
  p.k_o = k_o;
  p.L = k_o * R;
  p.lambda0_hat = alpha * std::numbers::pi * std::numbers::pi / (diam_K * diam_K);
  p.c_hat = 1.0 / (4.0 * beta);
  p.k_T = std::sqrt(p.c_hat / (2.0 * p.lambda0_hat));
  p.T = p.k_T * (R - p.L);
  if (!(p.L < R - 2.0))
    p.warnings.push_back("L = " + format_value(p.L) + " >= R - 2 = " + format_value(R - 2.0) +
                         ": outside the admissible range of the error bound (expected for small R)");
  return p;
}

std::vector<UpscaleResult> upscale_parabolic_multi(const CoefficientField& field,
                                                   const UpscaleOptions& opts,
                                                   const std::vector<int>& qs) {
  if (qs.empty()) throw std::invalid_argument("upscale: need at least one filter order");
  const double t0 = now_ms();
  const int d = field.dim();
  ParameterChoice p = choose(field, opts);
  check_admissibility(p, d, p.warnings);

  BoxSystem sys = build_box_system(field, opts.R, opts.n_per_cell);
  if (p.L > sys.mesh.R) throw std::invalid_argument("averaging box exceeds sampling box");

  std::int64_t matvecs = 0;
  const double rho = estimate_spectral_radius(sys.A, sys.mass, &sys.fixed, &matvecs);

  std::vector<std::vector<double>> filtered_mass;
  for (int q : qs)
    filtered_mass.push_back(assemble_filtered_mass(sys.mesh, make_filter(q, p.L, d)));
  const std::vector<FilteredMean> means = nodal_filtered_means(sys.mesh, field, filtered_mass);

  // initial states u^i = M^{-1} b_i, boundary zeroed by construction
  std::vector<std::vector<double>> U(static_cast<std::size_t>(d));
  for (int dir = 0; dir < d; ++dir) {
    U[static_cast<std::size_t>(dir)].resize(sys.mass.size());
    for (std::size_t k = 0; k < sys.mass.size(); ++k)
      U[static_cast<std::size_t>(dir)][k] = sys.b[static_cast<std::size_t>(dir)][k] / sys.mass[k];
  }

  // correlation samples q_ij(t) per filter, pairs (0,0), (0,1), (1,1)
  const int npairs = d == 1 ? 1 : 3;
  std::vector<double> times;
  std::vector<std::vector<std::vector<double>>> trace(
      qs.size(), std::vector<std::vector<double>>(static_cast<std::size_t>(npairs)));
  HeatObserver observer = [&](double t, const std::vector<std::vector<double>>& states) {
    times.push_back(t);
    for (std::size_t f = 0; f < filtered_mass.size(); ++f) {
      const double* mw = filtered_mass[f].data();
      const std::size_t n = filtered_mass[f].size();
      if (d == 1) {
        trace[f][0].push_back(kern::wdot(mw, states[0].data(), states[0].data(), n));
      } else {
        trace[f][0].push_back(kern::wdot(mw, states[0].data(), states[0].data(), n));
        trace[f][1].push_back(kern::wdot(mw, states[0].data(), states[1].data(), n));
        trace[f][2].push_back(kern::wdot(mw, states[1].data(), states[1].data(), n));
      }
    }
  };

  const HeatStats stats = integrate_heat(sys.A, sys.mass, sys.fixed, U, p.T, rho, opts.time,
                                         observer);
  matvecs += stats.matvecs;

  std::vector<UpscaleResult> results;
  for (std::size_t f = 0; f < qs.size(); ++f) {
    UpscaleResult r;
    UpscaleOptions o = opts;
    o.q = qs[f];
    stamp_common(r, o, p, sys.mesh);
    const double total = means[f].total;
    if (!(total > 0.0)) throw NumericalError("filter weight vanishes on the mesh");
    double J[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    if (d == 1) {
      J[0][0] = simpson_nonuniform(times, trace[f][0]);
    } else {
      J[0][0] = simpson_nonuniform(times, trace[f][0]);
      J[0][1] = J[1][0] = simpson_nonuniform(times, trace[f][1]);
      J[1][1] = simpson_nonuniform(times, trace[f][2]);
    }
    r.a0 = Tensor(d);
    r.filtered_mean = Tensor(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        r.filtered_mean.m[i][j] = means[f].raw.m[i][j] / total;
        r.a0.m[i][j] = (means[f].raw.m[i][j] - 2.0 * J[i][j]) / total;
      }
    symmetrize(r.a0);
    r.n_steps = stats.steps;
    r.matvecs = matvecs;
    r.energy_monotone = stats.energy_monotone;
    r.max_energy_ratio = stats.max_energy_ratio;
    r.walltime_ms = now_ms() - t0;
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<UpscaleResult> upscale_elliptic_multi(const CoefficientField& field,
                                                  const UpscaleOptions& opts,
                                                  const std::vector<int>& qs) {
  if (qs.empty()) throw std::invalid_argument("upscale: need at least one filter order");
  if (opts.method != Method::elliptic_standard && opts.method != Method::elliptic_regularized)
    throw std::invalid_argument("upscale_elliptic_multi: elliptic methods only");
  const double t0 = now_ms();
  const int d = field.dim();
  ParameterChoice p = choose(field, opts);

  BoxSystem sys = build_box_system(field, opts.R, opts.n_per_cell);
  if (p.L > sys.mesh.R) throw std::invalid_argument("averaging box exceeds sampling box");

  std::int64_t matvecs = 0;
  double t_reg = 0.0;
  if (opts.method == Method::elliptic_regularized) {
    t_reg = opts.t_reg > 0.0 ? opts.t_reg : (p.R - p.L) * (p.R - p.L);
    if (!(t_reg > 0.0)) throw std::invalid_argument("regularization time must be positive");
    // A + (1/T_reg) diag(M) on the free rows; Dirichlet rows stay identity
    for (int i = 0; i < sys.A.n; ++i) {
      if (sys.fixed[static_cast<std::size_t>(i)]) continue;
      for (int k = sys.A.row_ptr[static_cast<std::size_t>(i)];
           k < sys.A.row_ptr[static_cast<std::size_t>(i) + 1]; ++k)
        if (sys.A.col[static_cast<std::size_t>(k)] == i) {
          sys.A.val[static_cast<std::size_t>(k)] += sys.mass[static_cast<std::size_t>(i)] / t_reg;
          break;
        }
    }
  }

  std::vector<std::vector<double>> chi;
  for (int dir = 0; dir < d; ++dir)
    chi.push_back(solve_corrector(sys, dir, opts.solver, &matvecs));
  const std::vector<double>* grads[2] = {nullptr, nullptr};
  for (int dir = 0; dir < d; ++dir) grads[dir] = &chi[static_cast<std::size_t>(dir)];

  std::vector<UpscaleResult> results;
  for (int q : qs) {
    UpscaleResult r;
    UpscaleOptions o = opts;
    o.q = q;
    stamp_common(r, o, p, sys.mesh);
    const FilterSpec filter = make_filter(q, p.L, d);
    r.a0 = opts.method == Method::elliptic_regularized
               ? filtered_energy(sys.mesh, field, &filter, grads)
               : filtered_flux(sys.mesh, field, &filter, grads);
    symmetrize(r.a0);
    if (opts.method == Method::elliptic_regularized) r.T = t_reg;
    r.matvecs = matvecs;
    r.walltime_ms = now_ms() - t0;
    results.push_back(std::move(r));
  }
  return results;
}

UpscaleResult periodic_reference_tensor(const CoefficientField& field, int n_per_cell,
                                        const SolveOptions& solver) {
  if (!field.periodic())
    throw std::invalid_argument("periodic reference requires periodic field");
  const double t0 = now_ms();
  const int d = field.dim();
  const StructuredMesh mesh = build_periodic_cell_mesh(n_per_cell, d);
  const CsrMatrix A = assemble_stiffness(mesh, field);

  SolveOptions po = solver;
  po.project_zero_mean = true;

  UpscaleResult r;
  r.method = Method::periodic_reference;
  r.R = mesh.R;
  r.L = mesh.R;
  r.h = mesh.h;
  r.dofs = mesh.num_nodes();

  std::vector<std::vector<double>> chi;
  std::int64_t matvecs = 0;
  for (int dir = 0; dir < d; ++dir) {
    std::vector<double> b = assemble_load(mesh, field, dir);
    std::vector<double> x(b.size(), 0.0);
    const SolveResult sr = cg_solve(A, b, x, po);
    matvecs += sr.matvecs;
    if (!sr.converged)
      throw NumericalError("cg did not converge (relative residual " +
                           format_value(sr.residual) + " after " +
                           std::to_string(sr.iterations) + " iterations)");
    chi.push_back(std::move(x));
  }
  const std::vector<double>* grads[2] = {nullptr, nullptr};
  for (int dir = 0; dir < d; ++dir) grads[dir] = &chi[static_cast<std::size_t>(dir)];
  r.a0 = filtered_flux(mesh, field, nullptr, grads);
  symmetrize(r.a0);
  r.matvecs = matvecs;
  r.walltime_ms = now_ms() - t0;
  return r;
}

UpscaleResult upscale(const CoefficientField& field, const UpscaleOptions& opts) {
  switch (opts.method) {
    case Method::parabolic: {
      std::vector<UpscaleResult> rs = upscale_parabolic_multi(field, opts, {opts.q});
      return rs.front();
    }
    case Method::elliptic_standard:
    case Method::elliptic_regularized: {
      std::vector<UpscaleResult> rs = upscale_elliptic_multi(field, opts, {opts.q});
      return rs.front();
    }
    case Method::periodic_reference:
      return periodic_reference_tensor(field, opts.n_per_cell, opts.solver);
  }
  throw std::invalid_argument("unknown method");
}

double harmonic_mean_1d(const std::function<double(double)>& profile, int n_quad) {
  if (n_quad < 2) n_quad = 2;
  if (n_quad % 2 != 0) ++n_quad;
  auto integrate = [&](int n) {
    const double h = 1.0 / n;
    double s = 0.0;
    for (int k = 0; k < n; k += 2) {
      const double x0 = k * h, x1 = (k + 1) * h, x2 = (k + 2) * h;
      s += h / 3.0 * (1.0 / profile(x0) + 4.0 / profile(x1) + 1.0 / profile(x2));
    }
    return s;
  };
  double prev = integrate(n_quad);
  for (int n = 2 * n_quad; n <= (1 << 24); n *= 2) {
    const double cur = integrate(n);
    if (std::fabs(cur - prev) <= 1e-12 * std::max(1.0, std::fabs(cur))) return 1.0 / cur;
    prev = cur;
  }
  return 1.0 / prev;
}

EquivalenceReport equivalence_check(const CoefficientField& field, double R, int n_per_cell,
                                    double T_long, const TimeOptions& time,
                                    const SolveOptions& solver) {
  if (!(T_long > 0.0)) throw std::invalid_argument("T_long must be positive");
  const int d = field.dim();
  require_bounds(field);

  BoxSystem sys = build_box_system(field, R, n_per_cell);
  CsrMatrix H1 = assemble_laplacian(sys.mesh);  // unit-coefficient seminorm matrix
  apply_dirichlet(H1, sys.fixed);
  const std::size_t n = sys.mass.size();

  EquivalenceReport rep;

  // correctors chi_i = A^{-1} b_i
  std::vector<std::vector<double>> chi;
  for (int dir = 0; dir < d; ++dir)
    chi.push_back(solve_corrector(sys, dir, solver, &rep.matvecs));

  const double rho = estimate_spectral_radius(sys.A, sys.mass, &sys.fixed, &rep.matvecs);

  std::vector<std::vector<double>> U(static_cast<std::size_t>(d));
  for (int dir = 0; dir < d; ++dir) {
    U[static_cast<std::size_t>(dir)].resize(n);
    for (std::size_t k = 0; k < n; ++k)
      U[static_cast<std::size_t>(dir)][k] = sys.b[static_cast<std::size_t>(dir)][k] / sys.mass[k];
  }
  std::vector<double> norm0(static_cast<std::size_t>(d));
  for (int dir = 0; dir < d; ++dir)
    norm0[static_cast<std::size_t>(dir)] = std::sqrt(kern::wdot(
        sys.mass.data(), U[static_cast<std::size_t>(dir)].data(),
        U[static_cast<std::size_t>(dir)].data(), n));

  // incremental composite Simpson for S_i = ∫ u^i dt (vector-valued) plus the
  // scalar correlation traces for r2
  const int npairs = d == 1 ? 1 : 3;
  std::vector<double> times;
  std::vector<std::vector<double>> trace(static_cast<std::size_t>(npairs));
  std::vector<std::vector<double>> S(static_cast<std::size_t>(d), std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> prev2(static_cast<std::size_t>(d)),
      prev1(static_cast<std::size_t>(d));
  HeatObserver observer = [&](double t, const std::vector<std::vector<double>>& states) {
    times.push_back(t);
    if (d == 1) {
      trace[0].push_back(kern::wdot(sys.mass.data(), states[0].data(), states[0].data(), n));
    } else {
      trace[0].push_back(kern::wdot(sys.mass.data(), states[0].data(), states[0].data(), n));
      trace[1].push_back(kern::wdot(sys.mass.data(), states[0].data(), states[1].data(), n));
      trace[2].push_back(kern::wdot(sys.mass.data(), states[1].data(), states[1].data(), n));
    }
    const std::size_t k = times.size() - 1;  // node index
    for (int dir = 0; dir < d; ++dir) {
      auto& p2 = prev2[static_cast<std::size_t>(dir)];
      auto& p1 = prev1[static_cast<std::size_t>(dir)];
      if (k == 0) {
        p2 = states[static_cast<std::size_t>(dir)];
      } else if (k % 2 == 1) {
        p1 = states[static_cast<std::size_t>(dir)];
      } else {
        const double h1 = times[k - 1] - times[k - 2];
        const double h2 = times[k] - times[k - 1];
        const double c = (h1 + h2) / 6.0;
        const double w0 = c * (2.0 - h2 / h1);
        const double w1 = c * (h1 + h2) * (h1 + h2) / (h1 * h2);
        const double w2 = c * (2.0 - h1 / h2);
        auto& acc = S[static_cast<std::size_t>(dir)];
        kern::axpy(w0, p2.data(), acc.data(), n);
        kern::axpy(w1, p1.data(), acc.data(), n);
        kern::axpy(w2, states[static_cast<std::size_t>(dir)].data(), acc.data(), n);
        p2 = states[static_cast<std::size_t>(dir)];
      }
    }
  };

  const HeatStats stats =
      integrate_heat(sys.A, sys.mass, sys.fixed, U, T_long, rho, time, observer);
  rep.matvecs += stats.matvecs;
  rep.steps = stats.steps;

  // trailing odd interval: close with the trapezoid rule
  if (times.size() % 2 == 0 && times.size() >= 2) {
    const std::size_t k = times.size() - 1;
    const double h = 0.5 * (times[k] - times[k - 1]);
    for (int dir = 0; dir < d; ++dir) {
      kern::axpy(h, prev2[static_cast<std::size_t>(dir)].data(),
                 S[static_cast<std::size_t>(dir)].data(), n);
      kern::axpy(h, U[static_cast<std::size_t>(dir)].data(),
                 S[static_cast<std::size_t>(dir)].data(), n);
    }
  }

  // decay precondition
  rep.decay_ratio = 0.0;
  for (int dir = 0; dir < d; ++dir) {
    const double nT = std::sqrt(kern::wdot(sys.mass.data(),
                                           U[static_cast<std::size_t>(dir)].data(),
                                           U[static_cast<std::size_t>(dir)].data(), n));
    if (norm0[static_cast<std::size_t>(dir)] > 0.0)
      rep.decay_ratio = std::max(rep.decay_ratio, nT / norm0[static_cast<std::size_t>(dir)]);
  }
  if (rep.decay_ratio > 1e-8) throw NumericalError("increase T_long");

  // r1: discrete H1 distance between chi and the time integral
  std::vector<double> diff(n), tmp(n);
  auto h1_norm = [&](const std::vector<double>& v) {
    H1.multiply(v.data(), tmp.data());
    const double semi = kern::dot(v.data(), tmp.data(), n);
    const double l2 = kern::wdot(sys.mass.data(), v.data(), v.data(), n);
    return std::sqrt(std::max(0.0, semi + l2));
  };
  rep.r1 = 0.0;
  for (int dir = 0; dir < d; ++dir) {
    const auto& c = chi[static_cast<std::size_t>(dir)];
    const auto& s = S[static_cast<std::size_t>(dir)];
    for (std::size_t k = 0; k < n; ++k) diff[k] = c[k] - s[k];
    const double num = h1_norm(diff);
    const double den = h1_norm(c);
    if (den > 0.0)
      rep.r1 = std::max(rep.r1, num / den);
    else if (num > 0.0)
      rep.r1 = std::max(rep.r1, 1.0);
  }

  // r2: energy identity, (1/2) chi_i . A chi_j vs ∫∫ u^i u^j
  double E[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  for (int jdir = 0; jdir < d; ++jdir) {
    sys.A.multiply(chi[static_cast<std::size_t>(jdir)].data(), tmp.data());
    for (int idir = 0; idir < d; ++idir)
      E[idir][jdir] = 0.5 * kern::dot(chi[static_cast<std::size_t>(idir)].data(), tmp.data(), n);
  }
  double P[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  P[0][0] = simpson_nonuniform(times, trace[0]);
  if (d == 2) {
    P[0][1] = P[1][0] = simpson_nonuniform(times, trace[1]);
    P[1][1] = simpson_nonuniform(times, trace[2]);
  }
  rep.r2 = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double num = std::fabs(E[i][j] - P[i][j]);
      const double den = std::fabs(E[i][i]);
      if (den > 0.0)
        rep.r2 = std::max(rep.r2, num / den);
      else if (num > 0.0)
        rep.r2 = std::max(rep.r2, 1.0);
    }
  return rep;
}

}  // namespace homog
