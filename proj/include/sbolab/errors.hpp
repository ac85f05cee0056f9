#pragma once

#include <stdexcept>
#include <string>

namespace sbolab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (NaN input, singular point, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma (or a Gamma-built parameter) hit a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series failed to converge or was asked to evaluate outside its disk.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// nu - lambda is not a non-negative even integer.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parameters outside the range where an integral converges absolutely.
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result requested in a function class that cannot represent it.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Quadrature did not reach its tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// The evaluation budget of a quadrature run was exhausted.
class BudgetExceeded : public QuadratureError {
 public:
  using QuadratureError::QuadratureError;
};

/// Malformed user configuration (CLI options, literals).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbolab
