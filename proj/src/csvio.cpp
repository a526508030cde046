#include "homog/csvio.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace homog {

namespace {

constexpr const char* kHeader =
    "method,R,L,T,q,ko,h,nt,a11,a12,a21,a22,err_fro,dofs,matvecs,walltime_ms,seed";

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw std::invalid_argument("csv: bad numeric field '" + s + "'");
  return v;
}

long long parse_int(const std::string& s) {
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str()) throw std::invalid_argument("csv: bad integer field '" + s + "'");
  return v;
}

}  // namespace

const char* csv_header() { return kHeader; }

std::string csv_to_string(const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  os << kHeader << '\n';
  for (const SweepRecord& r : records) {
    if (r.failed && !r.note.empty())
      os << "# " << r.method << " R=" << fmt_double(r.R) << " q=" << r.q << ": " << r.note
         << '\n';
    os << r.method << ',' << fmt_double(r.R) << ',' << fmt_double(r.L) << ',' << fmt_double(r.T)
       << ',' << r.q << ',' << fmt_double(r.k_o) << ',' << fmt_double(r.h) << ',' << r.nt << ','
       << fmt_double(r.a0.m[0][0]) << ',' << fmt_double(r.a0.m[0][1]) << ','
       << fmt_double(r.a0.m[1][0]) << ',' << fmt_double(r.a0.m[1][1]) << ','
       << fmt_double(r.err_fro) << ',' << r.dofs << ',' << r.matvecs << ','
       << fmt_double(r.walltime_ms) << ',' << r.seed << '\n';
  }
  return os.str();
}

void write_csv(const std::string& path, const std::vector<SweepRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("csv: cannot open '" + path + "' for writing");
  out << csv_to_string(records);
  if (!out.good()) throw std::runtime_error("csv: write to '" + path + "' failed");
}

std::vector<SweepRecord> csv_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kHeader)
        throw std::invalid_argument("csv: unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    const std::vector<std::string> f = split_row(line);
    if (f.size() != 17)
      throw std::invalid_argument("csv: expected 17 fields, got " + std::to_string(f.size()));
    SweepRecord r;
    r.method = f[0];
    r.R = parse_double(f[1]);
    r.L = parse_double(f[2]);
    r.T = parse_double(f[3]);
    r.q = static_cast<int>(parse_int(f[4]));
    r.k_o = parse_double(f[5]);
    r.h = parse_double(f[6]);
    r.nt = static_cast<int>(parse_int(f[7]));
    r.a0.m[0][0] = parse_double(f[8]);
    r.a0.m[0][1] = parse_double(f[9]);
    r.a0.m[1][0] = parse_double(f[10]);
    r.a0.m[1][1] = parse_double(f[11]);
    r.err_fro = parse_double(f[12]);
    r.dofs = parse_int(f[13]);
    r.matvecs = parse_int(f[14]);
    r.walltime_ms = parse_double(f[15]);
    r.seed = static_cast<std::uint64_t>(parse_int(f[16]));
    r.failed = std::isnan(r.err_fro);
    records.push_back(std::move(r));
  }
  if (!header_seen) throw std::invalid_argument("csv: missing header");
  return records;
}

std::vector<SweepRecord> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("csv: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return csv_from_string(buf.str());
}

}  // namespace homog
