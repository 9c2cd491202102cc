#pragma once

#include <stdexcept>
#include <string>

namespace horolab {

// Raised when a computation lacks the data it needs (too few samples,
// unreachable depth). CLI maps this to exit code 3.
struct InsufficientDataError : std::runtime_error {
  explicit InsufficientDataError(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised when a configuration cannot satisfy a structural requirement
// (e.g. no shrink factor makes the horoball system disjoint). Exit code 2.
struct ConfigurationError : std::runtime_error {
  explicit ConfigurationError(const std::string& what)
      : std::runtime_error(what) {}
};

// Config file syntax/semantic errors with a line number. Exit code 2.
struct ConfigParseError : std::runtime_error {
  int line;
  ConfigParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

// Numeric failures carrying a diagnostic (inversion out of range, underflow).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant observed broken at runtime (overlapping horoballs,
// overlapping excursions).
struct InvariantViolationError : std::runtime_error {
  explicit InvariantViolationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace horolab
