#pragma once

#include <stdexcept>
#include <string>

namespace plumbcalc {

// Raised for malformed user input: config files, out-of-range parameters,
// violated preconditions the caller controls. CLI maps this to exit code 2.
class input_error : public std::runtime_error {
  public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal invariant fails (e.g. a kernel that should be
// one-dimensional is not). CLI maps this to exit code 3.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace plumbcalc
