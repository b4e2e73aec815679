#ifndef MIXREC_ERRORS_HPP
#define MIXREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixrec {

/// Invalid configuration or precondition violation (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure while processing valid inputs (CLI exit code 3).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mixrec

#endif  // MIXREC_ERRORS_HPP
