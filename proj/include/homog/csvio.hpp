#pragma once

#include <string>
#include <vector>

#include "homog/sweep.hpp"

namespace homog {

// Column layout shared by writer and reader.
const char* csv_header();

// Writes records in order.  Doubles use 17 significant digits so values
// round-trip bit-exactly; failed rows carry err_fro = nan preceded by a
// `#` comment line with the failure note.
void write_csv(const std::string& path, const std::vector<SweepRecord>& records);
std::string csv_to_string(const std::vector<SweepRecord>& records);

// Parses a file produced by write_csv (comment lines ignored).  Throws
// std::invalid_argument on a malformed header or row.
std::vector<SweepRecord> read_csv(const std::string& path);
std::vector<SweepRecord> csv_from_string(const std::string& text);

}  // namespace homog
