// homog — effective-coefficient upscaling toolkit.
//
// Subcommands: upscale, sweep, reference, equivalence, bench, plot.
// Exit codes: 0 success, 1 configuration error, 2 numerical failure in a
// non-sweep command (sweeps record per-point failures as NaN rows instead).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homog/coefficients.hpp"
#include "homog/csvio.hpp"
#include "homog/errors.hpp"
#include "homog/simd.hpp"
#include "homog/svgplot.hpp"
#include "homog/sweep.hpp"
#include "homog/upscale.hpp"

namespace {

struct CoefFlags {
  std::string name = "gloria";
  double value = 1.0;           // constant
  double c1 = 1.0, c2 = 4.0;    // checkerboard
  std::uint64_t seed = 1;       // lognormal
  int modes = 64;
  double sigma = 0.5;
  double corr_len = 0.5;
};

void add_coef_flags(CLI::App* cmd, CoefFlags& cf) {
  cmd->add_option("--coef", cf.name,
                  "coefficient field: constant|gloria|laminate|laminate1d|checkerboard|lognormal")
      ->capture_default_str();
  cmd->add_option("--value", cf.value, "constant field value")->capture_default_str();
  cmd->add_option("--c1", cf.c1, "checkerboard phase 1")->capture_default_str();
  cmd->add_option("--c2", cf.c2, "checkerboard phase 2")->capture_default_str();
  cmd->add_option("--seed", cf.seed, "lognormal realization seed")->capture_default_str();
  cmd->add_option("--modes", cf.modes, "lognormal Fourier mode count")->capture_default_str();
  cmd->add_option("--sigma", cf.sigma, "lognormal log-field std deviation")
      ->capture_default_str();
  cmd->add_option("--corr-len", cf.corr_len, "lognormal correlation length")
      ->capture_default_str();
}

homog::CoefficientField make_field(const CoefFlags& cf) {
  using homog::CoefficientField;
  if (cf.name == "constant") return CoefficientField::make_constant(2, cf.value);
  if (cf.name == "gloria" || cf.name == "gloria_lebris")
    return CoefficientField::make_gloria_lebris();
  if (cf.name == "laminate")
    return CoefficientField::make_laminate_1d(
        [](double x) { return 2.0 + std::sin(2.0 * std::numbers::pi * x); }, 2);
  if (cf.name == "laminate1d")
    return CoefficientField::make_laminate_1d(
        [](double x) { return 2.0 + std::sin(2.0 * std::numbers::pi * x); }, 1);
  if (cf.name == "checkerboard") return CoefficientField::make_checkerboard(cf.c1, cf.c2);
  if (cf.name == "lognormal")
    return CoefficientField::make_lognormal(cf.seed, cf.modes, cf.sigma, cf.corr_len, 2);
  throw std::invalid_argument("unknown coefficient field '" + cf.name + "'");
}

// lognormal (and custom) fields need sampled ellipticity bounds before
// parameter selection; sample once over the largest box in play.
void ensure_bounds(homog::CoefficientField& field, double box_edge) {
  if (field.bounds().known()) return;
  const int per_unit = 512;
  const int samples = static_cast<int>(
      std::min(8192.0, per_unit * std::max(1.0, std::ceil(box_edge))));
  homog::ellipticity_bounds(field, samples, box_edge);
}

struct TimeFlags {
  std::string mode = "fixed";
  int nt = 0;
  double tol_t = 1e-6;
  double damping = 0.05;
  double grading = 3.0;
};

void add_time_flags(CLI::App* cmd, TimeFlags& tf) {
  cmd->add_option("--time-mode", tf.mode, "time stepping: fixed|adaptive")
      ->check(CLI::IsMember({"fixed", "adaptive"}))
      ->capture_default_str();
  cmd->add_option("--nt", tf.nt, "fixed-mode step count (0 = auto)")->capture_default_str();
  cmd->add_option("--tol-t", tf.tol_t, "adaptive local-error tolerance")->capture_default_str();
  cmd->add_option("--damping", tf.damping, "Chebyshev damping")->capture_default_str();
  cmd->add_option("--grading", tf.grading, "fixed-mode node grading exponent")
      ->capture_default_str();
}

homog::TimeOptions make_time(const TimeFlags& tf) {
  homog::TimeOptions t;
  t.mode = tf.mode == "adaptive" ? homog::TimeOptions::Mode::adaptive
                                 : homog::TimeOptions::Mode::fixed;
  t.n_steps = tf.nt;
  t.tol_t = tf.tol_t;
  t.damping = tf.damping;
  t.grading = tf.grading;
  return t;
}

struct SolverFlags {
  double tol = 1e-10;
  int maxit = 0;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& sf) {
  cmd->add_option("--tol", sf.tol, "CG relative residual tolerance")->capture_default_str();
  cmd->add_option("--maxit", sf.maxit, "CG iteration cap (0 = 20*sqrt(N))")
      ->capture_default_str();
}

homog::SolveOptions make_solver(const SolverFlags& sf) {
  homog::SolveOptions s;
  s.tol = sf.tol;
  s.max_iter = sf.maxit;
  return s;
}

// "a:b:c" arithmetic progression, or comma-separated values
std::vector<double> parse_R_list(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    double a = 0.0, b = 0.0, c = 1.0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &a, &b, &c) != 3 || !(c > 0.0))
      throw std::invalid_argument("bad R range '" + text + "' (want start:stop:step)");
    for (double v = a; v <= b + 1e-9 * c; v += c) out.push_back(v);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty R list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::vector<homog::Method> parse_methods(const std::string& text) {
  std::vector<homog::Method> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(homog::parse_method(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty method list");
  return out;
}

void print_tensor(const homog::Tensor& a, int dim) {
  if (dim == 1) {
    std::printf("a0: %.10g\n", a.m[0][0]);
    return;
  }
  std::printf("a0: [[%.10g, %.10g], [%.10g, %.10g]]\n", a.m[0][0], a.m[0][1], a.m[1][0],
              a.m[1][1]);
}

void print_result(const homog::UpscaleResult& r, int dim) {
  std::printf("method: %s\n", homog::method_name(r.method));
  std::printf("R: %.10g  L: %.10g  T: %.10g  q: %d  ko: %.10g  h: %.10g\n", r.R, r.L, r.T, r.q,
              r.k_o, r.h);
  print_tensor(r.a0, dim);
  std::printf("nt: %d  dofs: %lld  matvecs: %lld  walltime_ms: %.1f\n", r.n_steps,
              static_cast<long long>(r.dofs), static_cast<long long>(r.matvecs), r.walltime_ms);
  for (const std::string& w : r.warnings) std::printf("warning: %s\n", w.c_str());
}

int dispatch(int argc, char** argv) {
  CLI::App app{"homog — effective coefficients of divergence-form operators from finite boxes"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file (flags override it)");
  app.fallthrough(false);

  std::string backend;
  app.add_option("--backend", backend, "force SIMD backend: scalar|avx2|neon")
      ->check(CLI::IsMember({"scalar", "avx2", "neon"}));

  // ---- upscale ----
  auto* up = app.add_subcommand("upscale", "single-run effective tensor");
  CoefFlags up_cf;
  TimeFlags up_tf;
  SolverFlags up_sf;
  std::string up_method = "parabolic";
  double up_R = 6.0, up_ko = 0.5, up_L = 0.0, up_T = 0.0, up_treg = 0.0;
  int up_q = 3, up_n = 32;
  add_coef_flags(up, up_cf);
  add_time_flags(up, up_tf);
  add_solver_flags(up, up_sf);
  up->add_option("--method", up_method,
                 "parabolic|elliptic_standard|elliptic_regularized|periodic_reference")
      ->capture_default_str();
  up->add_option("--R", up_R, "sampling box edge")->capture_default_str();
  up->add_option("--ko", up_ko, "oversampling ratio L/R")->capture_default_str();
  up->add_option("--q", up_q, "filter order")->capture_default_str();
  up->add_option("--n", up_n, "mesh intervals per unit length")->capture_default_str();
  up->add_option("--L", up_L, "override averaging box edge (0 = from ko)");
  up->add_option("--T", up_T, "override time horizon (0 = from parameter recipe)");
  up->add_option("--t-reg", up_treg, "regularization time (0 = (R-L)^2)");

  // ---- sweep ----
  auto* sw = app.add_subcommand("sweep", "convergence study over R");
  CoefFlags sw_cf;
  TimeFlags sw_tf;
  SolverFlags sw_sf;
  std::string sw_methods = "parabolic";
  std::string sw_q = "1,3";
  std::string sw_R = "4:12:2";
  std::string sw_ref = "auto";
  std::string sw_out = "sweep.csv";
  double sw_ko = 0.5, sw_treg = 0.0;
  int sw_n = 32;
  add_coef_flags(sw, sw_cf);
  add_time_flags(sw, sw_tf);
  add_solver_flags(sw, sw_sf);
  sw->add_option("--method", sw_methods, "comma-separated methods")->capture_default_str();
  sw->add_option("--q", sw_q, "comma-separated filter orders")->capture_default_str();
  sw->add_option("--R", sw_R, "R values: start:stop:step or comma list")->capture_default_str();
  sw->add_option("--ko", sw_ko, "oversampling ratio L/R")->capture_default_str();
  sw->add_option("--n", sw_n, "mesh intervals per unit length")->capture_default_str();
  sw->add_option("--t-reg", sw_treg, "regularization time (0 = (R-L)^2)");
  sw->add_option("--reference", sw_ref, "error reference: periodic|largest_R|auto")
      ->check(CLI::IsMember({"periodic", "largest_R", "auto"}))
      ->capture_default_str();
  sw->add_option("--out", sw_out, "output CSV path")->capture_default_str();

  // ---- reference ----
  auto* rf = app.add_subcommand("reference", "periodic-cell reference tensor");
  CoefFlags rf_cf;
  SolverFlags rf_sf;
  rf_sf.tol = 1e-12;
  int rf_n = 64;
  add_coef_flags(rf, rf_cf);
  add_solver_flags(rf, rf_sf);
  rf->add_option("--n", rf_n, "mesh intervals per unit length")->capture_default_str();

  // ---- equivalence ----
  auto* eq = app.add_subcommand("equivalence", "corrector/energy identity diagnostic");
  CoefFlags eq_cf;
  TimeFlags eq_tf;
  SolverFlags eq_sf;
  double eq_R = 4.0, eq_Tlong = 4.0;
  int eq_n = 32;
  add_coef_flags(eq, eq_cf);
  add_time_flags(eq, eq_tf);
  add_solver_flags(eq, eq_sf);
  eq->add_option("--R", eq_R, "sampling box edge")->capture_default_str();
  eq->add_option("--n", eq_n, "mesh intervals per unit length")->capture_default_str();
  eq->add_option("--T-long", eq_Tlong, "integration horizon")->capture_default_str();

  // ---- bench ----
  auto* bn = app.add_subcommand("bench", "cost-to-tolerance table from a sweep CSV");
  std::string bn_in, bn_tols = "1e-1,1e-2,1e-3", bn_out;
  bn->add_option("--in", bn_in, "sweep CSV input")->required();
  bn->add_option("--tol", bn_tols, "comma-separated tolerance ladder")->capture_default_str();
  bn->add_option("--out", bn_out, "optional CSV output path");

  // ---- plot ----
  auto* pl = app.add_subcommand("plot", "log-log SVG of err_fro vs R");
  std::string pl_in, pl_out = "plot.svg";
  pl->add_option("--in", pl_in, "sweep CSV input")->required();
  pl->add_option("--out", pl_out, "SVG output path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (!backend.empty()) {
    using homog::simd::Backend;
    const Backend b = backend == "scalar" ? Backend::scalar
                      : backend == "avx2" ? Backend::avx2
                                          : Backend::neon;
    homog::simd::set_backend(b);
  }

  if (up->parsed()) {
    homog::CoefficientField field = make_field(up_cf);
    ensure_bounds(field, up_R);
    homog::UpscaleOptions o;
    o.method = homog::parse_method(up_method);
    o.R = up_R;
    o.k_o = up_ko;
    o.q = up_q;
    o.n_per_cell = up_n;
    o.L_override = up_L;
    o.T_override = up_T;
    o.t_reg = up_treg;
    o.time = make_time(up_tf);
    o.solver = make_solver(up_sf);
    const homog::UpscaleResult r = homog::upscale(field, o);
    print_result(r, field.dim());
    return 0;
  }

  if (sw->parsed()) {
    homog::CoefficientField field = make_field(sw_cf);
    homog::SweepConfig cfg;
    cfg.methods = parse_methods(sw_methods);
    cfg.qs = parse_int_list(sw_q);
    cfg.Rs = parse_R_list(sw_R);
    cfg.k_o = sw_ko;
    cfg.n_per_cell = sw_n;
    cfg.time = make_time(sw_tf);
    cfg.solver = make_solver(sw_sf);
    cfg.t_reg = sw_treg;
    cfg.seed = sw_cf.name == "lognormal" ? sw_cf.seed : 0;
    if (sw_ref == "auto")
      cfg.reference = field.periodic() ? homog::SweepConfig::Reference::periodic
                                       : homog::SweepConfig::Reference::largest_R;
    else
      cfg.reference = sw_ref == "periodic" ? homog::SweepConfig::Reference::periodic
                                           : homog::SweepConfig::Reference::largest_R;
    ensure_bounds(field, cfg.Rs.back());
    const std::vector<homog::SweepRecord> records = homog::run_sweep(field, cfg);
    homog::write_csv(sw_out, records);
    int failed = 0;
    for (const auto& r : records) failed += r.failed ? 1 : 0;
    std::printf("wrote %zu records to %s (%d failed)\n", records.size(), sw_out.c_str(), failed);
    return 0;
  }

  if (rf->parsed()) {
    homog::CoefficientField field = make_field(rf_cf);
    const homog::UpscaleResult r =
        homog::periodic_reference_tensor(field, rf_n, make_solver(rf_sf));
    print_result(r, field.dim());
    return 0;
  }

  if (eq->parsed()) {
    homog::CoefficientField field = make_field(eq_cf);
    ensure_bounds(field, eq_R);
    const homog::EquivalenceReport rep = homog::equivalence_check(
        field, eq_R, eq_n, eq_Tlong, make_time(eq_tf), make_solver(eq_sf));
    std::printf("r1: %.6e\nr2: %.6e\ndecay_ratio: %.3e\nsteps: %d\nmatvecs: %lld\n", rep.r1,
                rep.r2, rep.decay_ratio, rep.steps, static_cast<long long>(rep.matvecs));
    return 0;
  }

  if (bn->parsed()) {
    const std::vector<homog::SweepRecord> records = homog::read_csv(bn_in);
    std::vector<double> tols;
    {
      std::size_t pos = 0;
      while (pos <= bn_tols.size()) {
        const std::size_t comma = bn_tols.find(',', pos);
        const std::string tok =
            bn_tols.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!tok.empty()) tols.push_back(std::stod(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    const std::vector<homog::BenchRow> rows = homog::bench(records, tols);
    std::fputs(homog::format_bench_table(rows).c_str(), stdout);
    if (!bn_out.empty()) {
      std::ofstream out(bn_out, std::ios::binary);
      if (!out) throw std::invalid_argument("bench: cannot open '" + bn_out + "'");
      out << "method,q,tol,reachable,R,dofs,matvecs,walltime_ms\n";
      for (const auto& r : rows) {
        char line[256];
        std::snprintf(line, sizeof line, "%s,%d,%.17g,%d,%.17g,%lld,%lld,%.17g\n",
                      r.method.c_str(), r.q, r.tol, r.reachable ? 1 : 0, r.R,
                      static_cast<long long>(r.dofs), static_cast<long long>(r.matvecs),
                      r.walltime_ms);
        out << line;
      }
    }
    return 0;
  }

  if (pl->parsed()) {
    const std::vector<homog::SweepRecord> records = homog::read_csv(pl_in);
    homog::emit_plot(records, pl_out);
    std::printf("wrote %s\n", pl_out.c_str());
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const homog::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failure: %s\n", e.what());
    return 2;
  }
}
