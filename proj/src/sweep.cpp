#include "homog/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "homog/errors.hpp"

namespace homog {

namespace {

SweepRecord record_from(const UpscaleResult& r, const SweepConfig& cfg) {
  SweepRecord rec;
  rec.method = method_name(r.method);
  rec.R = r.R;
  rec.L = r.L;
  rec.T = r.T;
  rec.q = r.q;
  rec.k_o = r.k_o;
  rec.h = r.h;
  rec.nt = r.n_steps;
  rec.a0 = r.a0;
  rec.dofs = r.dofs;
  rec.matvecs = r.matvecs;
  rec.walltime_ms = r.walltime_ms;
  rec.seed = cfg.seed;
  return rec;
}

SweepRecord failed_record(Method m, double R, int q, const SweepConfig& cfg,
                          const std::string& why) {
  SweepRecord rec;
  rec.method = method_name(m);
  rec.R = R;
  rec.q = q;
  rec.k_o = cfg.k_o;
  rec.h = 1.0 / cfg.n_per_cell;
  rec.err_fro = std::numeric_limits<double>::quiet_NaN();
  rec.seed = cfg.seed;
  rec.failed = true;
  rec.note = why;
  return rec;
}

UpscaleOptions base_options(Method m, double R, const SweepConfig& cfg) {
  UpscaleOptions o;
  o.method = m;
  o.R = R;
  o.k_o = cfg.k_o;
  o.n_per_cell = cfg.n_per_cell;
  o.time = cfg.time;
  o.solver = cfg.solver;
  o.t_reg = cfg.t_reg;
  return o;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const CoefficientField& field, const SweepConfig& config) {
  if (config.methods.empty()) throw std::invalid_argument("sweep: methods list is empty");
  if (config.Rs.empty()) throw std::invalid_argument("sweep: R list is empty");
  if (config.qs.empty()) throw std::invalid_argument("sweep: q list is empty");
  for (std::size_t k = 0; k < config.Rs.size(); ++k) {
    if (!(config.Rs[k] >= 1.0)) throw std::invalid_argument("sweep: R values must be >= 1");
    if (k > 0 && !(config.Rs[k] > config.Rs[k - 1]))
      throw std::invalid_argument("sweep: R values must be increasing");
  }

  // reference tensor for err_fro
  Tensor ref;
  if (config.reference == SweepConfig::Reference::periodic) {
    if (!field.periodic())
      throw std::invalid_argument(
          "sweep: periodic reference requires a periodic field (use the largest_R reference)");
    ref = periodic_reference_tensor(field, config.n_per_cell).a0;
  } else {
    UpscaleOptions o = base_options(Method::parabolic, config.Rs.back(), config);
    const int q_ref = *std::max_element(config.qs.begin(), config.qs.end());
    o.q = q_ref;
    ref = upscale(field, o).a0;
  }

  std::vector<SweepRecord> records;
  for (Method m : config.methods) {
    switch (m) {
      case Method::parabolic:
      case Method::elliptic_standard:
      case Method::elliptic_regularized: {
        for (double R : config.Rs) {
          UpscaleOptions o = base_options(m, R, config);
          try {
            const std::vector<UpscaleResult> rs =
                m == Method::parabolic ? upscale_parabolic_multi(field, o, config.qs)
                                       : upscale_elliptic_multi(field, o, config.qs);
            for (const UpscaleResult& r : rs) {
              SweepRecord rec = record_from(r, config);
              rec.err_fro = frobenius_norm(r.a0 - ref);
              records.push_back(std::move(rec));
            }
          } catch (const std::exception& e) {
            for (int q : config.qs) records.push_back(failed_record(m, R, q, config, e.what()));
          }
        }
        break;
      }
      case Method::periodic_reference: {
        // independent of R and q; computed once, replicated per sweep point
        try {
          const UpscaleResult r = periodic_reference_tensor(field, config.n_per_cell,
                                                            config.solver);
          for (int q : config.qs)
            for (double R : config.Rs) {
              SweepRecord rec = record_from(r, config);
              rec.R = R;
              rec.q = q;
              rec.err_fro = frobenius_norm(r.a0 - ref);
              records.push_back(std::move(rec));
            }
        } catch (const std::exception& e) {
          for (int q : config.qs)
            for (double R : config.Rs)
              records.push_back(failed_record(m, R, q, config, e.what()));
        }
        break;
      }
    }
  }

  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    if (a.method != b.method) return a.method < b.method;
    if (a.q != b.q) return a.q < b.q;
    return a.R < b.R;
  });
  return records;
}

double fit_slope(const std::vector<SweepRecord>& records, double lo, double hi) {
  std::vector<double> lx, ly;
  for (const SweepRecord& r : records) {
    if (r.failed || !std::isfinite(r.err_fro)) continue;
    if (!(r.err_fro >= lo) || !(r.err_fro <= hi)) continue;
    if (!(r.R > 0.0) || !(r.err_fro > 0.0)) continue;
    lx.push_back(std::log(r.R));
    ly.push_back(std::log(r.err_fro));
  }
  if (lx.size() < 3) throw NumericalError("insufficient points in window");
  const double nn = static_cast<double>(lx.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sx += lx[k];
    sy += ly[k];
    sxx += lx[k] * lx[k];
    sxy += lx[k] * ly[k];
  }
  const double denom = nn * sxx - sx * sx;
  if (denom == 0.0) throw NumericalError("insufficient points in window");
  return (nn * sxy - sx * sy) / denom;
}

std::vector<BenchRow> bench(const std::vector<SweepRecord>& records,
                            const std::vector<double>& tolerances) {
  if (tolerances.empty()) throw std::invalid_argument("bench: tolerance list is empty");
  // group keys in deterministic order
  std::vector<std::pair<std::string, int>> groups;
  for (const SweepRecord& r : records) {
    const std::pair<std::string, int> key{r.method, r.q};
    if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
  }
  std::sort(groups.begin(), groups.end());

  std::vector<BenchRow> rows;
  for (const auto& [method, q] : groups) {
    for (double tol : tolerances) {
      BenchRow row;
      row.method = method;
      row.q = q;
      row.tol = tol;
      double bestR = std::numeric_limits<double>::infinity();
      for (const SweepRecord& r : records) {
        if (r.method != method || r.q != q || r.failed) continue;
        if (!(r.err_fro <= tol)) continue;
        if (r.R < bestR) {
          bestR = r.R;
          row.reachable = true;
          row.R = r.R;
          row.dofs = r.dofs;
          row.matvecs = r.matvecs;
          row.walltime_ms = r.walltime_ms;
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "method                q       tol        R        dofs     matvecs   walltime_ms\n";
  for (const BenchRow& r : rows) {
    char line[160];
    if (r.reachable) {
      std::snprintf(line, sizeof line, "%-20s %2d  %8.2e  %7.3g  %10lld  %10lld  %12.1f\n",
                    r.method.c_str(), r.q, r.tol, r.R, static_cast<long long>(r.dofs),
                    static_cast<long long>(r.matvecs), r.walltime_ms);
    } else {
      std::snprintf(line, sizeof line, "%-20s %2d  %8.2e  unreachable within sweep\n",
                    r.method.c_str(), r.q, r.tol);
    }
    os << line;
  }
  return os.str();
}

}  // namespace homog
