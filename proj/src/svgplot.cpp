#include "homog/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace homog {

namespace {

constexpr double kLeft = 80.0, kRight = 820.0, kTop = 50.0, kBottom = 540.0;
constexpr double kWidth = 880.0, kHeight = 600.0;

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Series {
  std::string method;
  int q = 0;
  std::vector<std::pair<double, double>> points;  // (R, err), R ascending
};

}  // namespace

std::string svg_plot_string(const std::vector<SweepRecord>& records) {
  std::map<std::pair<std::string, int>, Series> groups;
  for (const SweepRecord& r : records) {
    if (r.failed || !std::isfinite(r.err_fro) || !(r.err_fro > 0.0) || !(r.R > 0.0)) continue;
    Series& s = groups[{r.method, r.q}];
    s.method = r.method;
    s.q = r.q;
    s.points.emplace_back(r.R, r.err_fro);
  }
  if (groups.empty()) throw std::invalid_argument("plot: no plottable records");

  double lxmin = 1e300, lxmax = -1e300, lymin = 1e300, lymax = -1e300;
  for (auto& [key, s] : groups) {
    std::sort(s.points.begin(), s.points.end());
    for (const auto& [R, err] : s.points) {
      lxmin = std::min(lxmin, std::log10(R));
      lxmax = std::max(lxmax, std::log10(R));
      lymin = std::min(lymin, std::log10(err));
      lymax = std::max(lymax, std::log10(err));
    }
  }
  if (lxmax - lxmin < 1e-9) {
    lxmin -= 0.5;
    lxmax += 0.5;
  }
  lymin = std::floor(lymin);
  lymax = std::ceil(lymax);
  if (lymax - lymin < 1.0) lymax = lymin + 1.0;

  auto X = [&](double R) {
    return kLeft + (std::log10(R) - lxmin) / (lxmax - lxmin) * (kRight - kLeft);
  };
  auto Y = [&](double err) {
    return kBottom - (std::log10(err) - lymin) / (lymax - lymin) * (kBottom - kTop);
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
     << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(kHeight) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
     << "\" fill=\"white\"/>\n";
  os << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\""
     << num(kRight - kLeft) << "\" height=\"" << num(kBottom - kTop)
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  // decade grid and y labels
  for (double d = lymin; d <= lymax + 1e-9; d += 1.0) {
    const double y = Y(std::pow(10.0, d));
    os << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kRight)
       << "\" y2=\"" << num(y) << "\" stroke=\"#dddddd\"/>\n";
    os << "<text x=\"" << num(kLeft - 8.0) << "\" y=\"" << num(y + 4.0)
       << "\" text-anchor=\"end\" font-size=\"12\">1e" << num(d) << "</text>\n";
  }
  // x ticks at distinct R values
  std::set<double> Rticks;
  for (const auto& [key, s] : groups)
    for (const auto& [R, err] : s.points) Rticks.insert(R);
  for (double R : Rticks) {
    const double x = X(R);
    os << "<line x1=\"" << num(x) << "\" y1=\"" << num(kBottom) << "\" x2=\"" << num(x)
       << "\" y2=\"" << num(kBottom + 5.0) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(x) << "\" y=\"" << num(kBottom + 20.0)
       << "\" text-anchor=\"middle\" font-size=\"12\">" << num(R) << "</text>\n";
  }
  os << "<text x=\"" << num(0.5 * (kLeft + kRight)) << "\" y=\"" << num(kHeight - 12.0)
     << "\" text-anchor=\"middle\" font-size=\"14\">sampling box size R</text>\n";
  os << "<text x=\"18\" y=\"" << num(0.5 * (kTop + kBottom))
     << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
     << num(0.5 * (kTop + kBottom)) << ")\">error (Frobenius norm)</text>\n";

  // guide lines, one per filter order present
  std::set<int> qs;
  for (const auto& [key, s] : groups) qs.insert(s.q);
  for (int q : qs) {
    const Series* anchor = nullptr;
    for (const auto& [key, s] : groups)
      if (s.q == q && !s.points.empty() && !anchor) anchor = &s;
    if (!anchor) continue;
    const double R0 = anchor->points.front().first;
    const double e0 = anchor->points.front().second * 2.0;
    const double R1 = anchor->points.back().first;
    if (!(R1 > R0)) continue;
    const double p = -(q + 1);
    const double e1 = e0 * std::pow(R1 / R0, p);
    os << "<line x1=\"" << num(X(R0)) << "\" y1=\"" << num(Y(e0)) << "\" x2=\"" << num(X(R1))
       << "\" y2=\"" << num(Y(e1))
       << "\" stroke=\"#999999\" stroke-dasharray=\"6,4\"/>\n";
    os << "<text x=\"" << num(X(R1) + 4.0) << "\" y=\"" << num(Y(e1))
       << "\" font-size=\"11\" fill=\"#666666\">slope " << p << "</text>\n";
  }

  // data series
  int idx = 0;
  for (const auto& [key, s] : groups) {
    const char* color = kPalette[idx % 8];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [R, err] : s.points) os << num(X(R)) << "," << num(Y(err)) << " ";
    os << "\"/>\n";
    for (const auto& [R, err] : s.points)
      os << "<circle cx=\"" << num(X(R)) << "\" cy=\"" << num(Y(err)) << "\" r=\"3\" fill=\""
         << color << "\"/>\n";
    const double ly = kTop + 18.0 + 16.0 * idx;
    os << "<line x1=\"" << num(kRight - 180.0) << "\" y1=\"" << num(ly - 4.0) << "\" x2=\""
       << num(kRight - 150.0) << "\" y2=\"" << num(ly - 4.0) << "\" stroke=\"" << color
       << "\" stroke-width=\"1.5\"/>\n";
    os << "<text x=\"" << num(kRight - 144.0) << "\" y=\"" << num(ly)
       << "\" font-size=\"12\">" << escape_xml(s.method) << " q=" << s.q << "</text>\n";
    ++idx;
  }
  os << "</svg>\n";
  return os.str();
}

void emit_plot(const std::vector<SweepRecord>& records, const std::string& svg_path) {
  const std::string svg = svg_plot_string(records);
  std::ofstream out(svg_path, std::ios::binary);
  if (!out) throw std::invalid_argument("plot: cannot open '" + svg_path + "' for writing");
  out << svg;
  if (!out.good()) throw std::runtime_error("plot: write to '" + svg_path + "' failed");
}

}  // namespace homog
