#pragma once

#include <stdexcept>
#include <string>

namespace homog {

// Runtime failure of a numerical procedure (divergence, missed tolerance,
// violated precondition detected from data).  The CLI maps this to exit
// code 2; configuration mistakes use std::invalid_argument (exit code 1).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homog
