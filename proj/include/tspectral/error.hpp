#pragma once

#include <stdexcept>
#include <string>

namespace tspectral {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not conform (non-square slices, mismatched p, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition (Hermitian, PSD, unit norm) is violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The operation needs an invertible (positive definite) operand.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Roundoff produced a result outside the accepted tolerance.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed tensor file or CLI input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tspectral
