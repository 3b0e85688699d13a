#pragma once

#include <stdexcept>
#include <string>

namespace lightshift {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a numerical argument does not hold (outside a series
/// domain, invalid quantum numbers, invalid atom parameters, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The detuning sits within the guard distance of a hyperfine pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Operator or tensor dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Tensor-shift cancellation is impossible for the requested detunings.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Malformed or invalid run configuration. Carries the 1-based line number
/// when the problem can be attributed to one line (0 otherwise).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace lightshift
