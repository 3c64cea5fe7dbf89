#pragma once

#include <stdexcept>
#include <string>

namespace perron {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Caller supplied an invalid value (bad vertex index, bad config, bad mode).
struct InputError : Error {
  using Error::Error;
};

/// Malformed textual input. `line` is 1-based when known, 0 otherwise.
struct FormatError : InputError {
  explicit FormatError(const std::string& msg, long line_no = 0)
      : InputError(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
  long line;
};

/// Operation applied outside its domain (disconnected input, n too small).
struct DomainError : Error {
  using Error::Error;
};

/// Iterative solver failed to reach its tolerance within the iteration cap.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& msg, long iterations_used, double residual_reached)
      : Error(msg), iterations(iterations_used), residual(residual_reached) {}
  long iterations;
  double residual;
};

/// Linear system is too close to singular: the shift does not clear the top
/// eigenvalue of the matrix being shifted.
struct ConditioningError : Error {
  using Error::Error;
};

/// Rejection sampling exhausted its attempt budget.
struct SamplingError : Error {
  using Error::Error;
};

/// Requested feature beyond implemented limits (e.g. graph6 with n > 62).
struct CapabilityError : Error {
  using Error::Error;
};

}  // namespace perron
