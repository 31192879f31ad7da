#pragma once

#include <stdexcept>
#include <string>

namespace gadic {

/// Argument outside the mathematical domain of an operation (negative n, d_0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value violates a structural invariant (digit out of range, bad color, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (config, serialized digits, integers).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The interval hypothesis of the minimality construction does not hold.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested bit window exceeds the configured memory budget.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a documented precondition (mismatched totals, n outside window).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gadic
