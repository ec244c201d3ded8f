#pragma once

#include <stdexcept>
#include <string>

namespace rwg {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad letter, bad permutation, bad family).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's precondition,
// e.g. a non-reduced word passed to crossing_sequence.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested mode does not apply to the given input.
class UnsupportedMode : public DomainError {
 public:
  using DomainError::DomainError;
};

// Enumeration would exceed the configured vertex budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A proven property failed to hold. Always a bug signal.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rwg
