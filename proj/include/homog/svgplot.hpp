#pragma once

#include <string>
#include <vector>

#include "homog/sweep.hpp"

namespace homog {

// Log-log err_fro vs R chart: one polyline per (method, q) group, dashed
// guide lines with slope -(q+1) per filter order, legend and decade grid.
// Output is deterministic for fixed input and is well-formed XML.
// Throws std::invalid_argument when no record has a positive finite err_fro.
std::string svg_plot_string(const std::vector<SweepRecord>& records);
void emit_plot(const std::vector<SweepRecord>& records, const std::string& svg_path);

}  // namespace homog
