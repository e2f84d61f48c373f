#pragma once

#include <stdexcept>
#include <string>

namespace liprime {

// Every failure raised by the library derives from Error so callers can map
// the whole family onto one exit path.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or numerically at) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method ran out of iterations or subdivisions.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A table is too small for the request, or a request exceeds a configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A Taylor step was refused because the series would not converge fast enough.
class StepTooLargeError : public Error {
 public:
  using Error::Error;
};

/// Result would not fit in a double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A cache file is malformed or has an unexpected version.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace liprime
