#pragma once

#include <stdexcept>

namespace qhe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the function (x outside the well,
/// non-positive length, log of a non-positive argument, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A closed-form approximation was evaluated where it no longer holds
/// (for example a non-positive variance).
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// An iterative method exhausted its budget before meeting its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A non-finite value appeared where a finite one is required.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Operands with incompatible dimensions, or a non-Hermitian operator.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The reverse (Dunkl-Williams) bound is undefined for the given state.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// A cycle with no temperature difference has no efficiency.
class DegenerateCycleError : public Error {
 public:
  using Error::Error;
};

/// A truncated basis is too small for the requested accuracy.
class TruncationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qhe
