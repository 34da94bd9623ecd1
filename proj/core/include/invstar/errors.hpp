#pragma once

#include <stdexcept>
#include <string>

namespace invstar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, pole at infinity and similar failures of exact arithmetic.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// The character fails to pair some graded components nondegenerately, or a
/// pairing matrix is identically singular.
class SingularCharacterError : public Error {
 public:
  using Error::Error;
};

/// A computation needs a bracket or a degree that lies outside the algebra's
/// cutoff window.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Malformed algebra spec file, unknown builtin, bad parameter.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed.  Signals a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace invstar
