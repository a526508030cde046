// End-to-end checks of the installed binary: spawns HOMOG_CLI_PATH (injected
// by the build) and inspects exit codes and artifacts.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "homog/csvio.hpp"

#ifndef HOMOG_CLI_PATH
#error "HOMOG_CLI_PATH must point at the homog binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout + stderr
};

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::current_path() / "cli_scratch";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path = scratch_dir() / ("out_" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(HOMOG_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
#if defined(_WIN32)
  r.exit_code = status;
#else
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
#endif
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("cli: help exits cleanly and lists the subcommands") {
  RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  for (const char* sub : {"upscale", "sweep", "reference", "equivalence", "bench", "plot"})
    CHECK(r.out.find(sub) != std::string::npos);
}

TEST_CASE("cli: upscale prints a tensor and run statistics") {
  RunResult r = run_cli("upscale --coef constant --value 2 --method elliptic_standard"
                        " --R 2 --n 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("method: elliptic_standard") != std::string::npos);
  CHECK(r.out.find("a0:") != std::string::npos);
  CHECK(r.out.find("2") != std::string::npos);
  CHECK(r.out.find("dofs:") != std::string::npos);
}

TEST_CASE("cli: configuration errors exit with status 1") {
  CHECK(run_cli("upscale --no-such-flag").exit_code == 1);
  CHECK(run_cli("upscale --coef bogus --R 2 --n 8").exit_code == 1);
  CHECK(run_cli("upscale --coef gloria --ko 1.5 --R 2 --n 8").exit_code == 1);
  CHECK(run_cli("sweep --coef lognormal --reference periodic --method parabolic"
                " --q 1 --R 2,3 --n 8 --out " +
                (scratch_dir() / "never.csv").string())
            .exit_code == 1);
  CHECK(run_cli("").exit_code == 1);  // a subcommand is required
}

TEST_CASE("cli: numerical failures exit with status 2") {
  RunResult r = run_cli("upscale --coef gloria --method elliptic_standard --R 2 --n 8"
                        " --maxit 2 --tol 1e-14");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("numerical failure") != std::string::npos);

  CHECK(run_cli("equivalence --coef gloria --R 2 --n 8 --T-long 0.01").exit_code == 2);
}

TEST_CASE("cli: sweep writes a parseable CSV and survives per-point failures") {
  const fs::path csv = scratch_dir() / "sweep_ok.csv";
  RunResult r = run_cli("sweep --coef gloria --method elliptic_standard --q 1,2"
                        " --R 2:3:1 --n 8 --out " + csv.string());
  CHECK(r.exit_code == 0);
  std::vector<homog::SweepRecord> recs = homog::read_csv(csv.string());
  REQUIRE(recs.size() == 4);
  for (const auto& rec : recs) {
    CHECK_FALSE(rec.failed);
    CHECK(rec.err_fro > 0.0);
  }

  // failing points keep exit code 0 and are marked in the file
  const fs::path bad_csv = scratch_dir() / "sweep_bad.csv";
  RunResult rb = run_cli("sweep --coef gloria --method elliptic_standard --q 1"
                         " --R 2,3 --n 8 --maxit 2 --tol 1e-14 --out " + bad_csv.string());
  CHECK(rb.exit_code == 0);
  std::vector<homog::SweepRecord> bad = homog::read_csv(bad_csv.string());
  REQUIRE(bad.size() == 2);
  CHECK(bad[0].failed);
  CHECK(slurp(bad_csv).find("# elliptic_standard") != std::string::npos);
}

TEST_CASE("cli: plot and bench consume sweep output") {
  const fs::path csv = scratch_dir() / "sweep_plot.csv";
  REQUIRE(run_cli("sweep --coef gloria --method elliptic_standard --q 1 --R 2,3,4 --n 8"
                  " --out " + csv.string())
              .exit_code == 0);

  const fs::path svg1 = scratch_dir() / "plot1.svg";
  const fs::path svg2 = scratch_dir() / "plot2.svg";
  CHECK(run_cli("plot --in " + csv.string() + " --out " + svg1.string()).exit_code == 0);
  CHECK(run_cli("plot --in " + csv.string() + " --out " + svg2.string()).exit_code == 0);
  const std::string s1 = slurp(svg1);
  CHECK(s1.rfind("<?xml", 0) == 0);
  CHECK(s1.find("</svg>") != std::string::npos);
  CHECK(s1 == slurp(svg2));  // byte-identical across runs

  RunResult bench = run_cli("bench --in " + csv.string() + " --tol 1e-1,1e-2,1e-8");
  CHECK(bench.exit_code == 0);
  CHECK(bench.out.find("method") != std::string::npos);
  CHECK(bench.out.find("elliptic_standard") != std::string::npos);

  CHECK(run_cli("plot --in /nonexistent.csv --out " + svg1.string()).exit_code == 1);
}

TEST_CASE("cli: reference and equivalence subcommands") {
  RunResult ref = run_cli("reference --coef laminate --n 32");
  CHECK(ref.exit_code == 0);
  CHECK(ref.out.find("method: periodic_reference") != std::string::npos);
  CHECK(ref.out.find("a0:") != std::string::npos);

  RunResult eq = run_cli("equivalence --coef constant --value 1 --R 2 --n 8 --T-long 0.5");
  CHECK(eq.exit_code == 0);
  CHECK(eq.out.find("r1:") != std::string::npos);
  CHECK(eq.out.find("r2:") != std::string::npos);
}

TEST_CASE("cli: config file provides defaults, flags override") {
  const fs::path cfg = scratch_dir() / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "[upscale]\n"
        << "coef=constant\n"
        << "value=2.5\n"
        << "method=elliptic_standard\n"
        << "R=3\n"
        << "n=8\n";
  }
  RunResult from_cfg = run_cli("--config " + cfg.string() + " upscale");
  CHECK(from_cfg.exit_code == 0);
  CHECK(from_cfg.out.find("R: 3") != std::string::npos);

  RunResult overridden = run_cli("--config " + cfg.string() + " upscale --R 2");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.out.find("R: 2") != std::string::npos);
}

TEST_CASE("cli: SIMD backend can be forced") {
  CHECK(run_cli("--backend scalar upscale --coef constant --value 1"
                " --method elliptic_standard --R 2 --n 8")
            .exit_code == 0);
#if defined(__x86_64__) || defined(_M_X64)
  CHECK(run_cli("--backend neon upscale --coef constant --value 1"
                " --method elliptic_standard --R 2 --n 8")
            .exit_code == 1);
#endif
}
