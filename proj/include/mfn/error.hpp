#pragma once

#include <stdexcept>
#include <string>

namespace mfn {

/// Invalid or inconsistent parameters supplied by the caller.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed one of the configured enumeration bounds.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, or reduction of a value with l in a denominator.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed (a counterexample to a verified claim).
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mfn
