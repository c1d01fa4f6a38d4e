#pragma once

#include <stdexcept>
#include <string>

namespace gpco {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A point was required to lie in a set (or in D ∩ dom f) and does not.
class PointNotInSet : public Error {
 public:
  using Error::Error;
};

/// A point was required to lie in the effective domain of a function.
class OutsideDomain : public Error {
 public:
  using Error::Error;
};

class EmptySetError : public Error {
 public:
  using Error::Error;
};

/// The function has an empty effective domain.
class ImproperFunction : public Error {
 public:
  using Error::Error;
};

/// Raised by the existence criteria when D ∩ dom f is empty.
class InfeasibleProblem : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class ScaleExceeded : public Error {
 public:
  using Error::Error;
};

/// An internally produced certificate failed exact re-verification.
/// This signals a bug, never bad input, so it derives from logic_error.
class CertificateViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gpco
