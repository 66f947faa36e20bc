#pragma once

#include <stdexcept>
#include <string>

namespace osc {

/// Raised when inputs violate an operation's preconditions.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a truncated expansion has not converged to the required tail bound.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by enumeration oracles whose search space exceeds the configured guard.
class TooLargeError : public std::length_error {
 public:
  explicit TooLargeError(const std::string& what) : std::length_error(what) {}
};

}  // namespace osc
