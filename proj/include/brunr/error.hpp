#pragma once

#include <stdexcept>
#include <string>

namespace brunr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A denominator generator does not lie in the numerator span.
class ContainmentViolation : public Error {
 public:
  using Error::Error;
};

/// A multiplication table fails a group axiom.
class NotAGroup : public Error {
 public:
  using Error::Error;
};

class OrderBoundExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// An enumeration or linear system is larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class WitnessNotFound : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class InvalidLattice : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace brunr
