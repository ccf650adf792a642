#pragma once

#include <stdexcept>
#include <string>

namespace equilex {

// Base class for every error thrown by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector lengths disagree with each other or with the ambient dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the mathematical domain of an operation
// (p <= 1, odd p where an even one is required, non-positive scale, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A parameter lies outside an admissible interval. The interval is carried
// along so that callers can report it.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

// Input data does not satisfy a structural hypothesis (not Hadamard, base set
// not equilateral, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two points of a set coincide.
class DegenerateSetError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Malformed input file or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace equilex
