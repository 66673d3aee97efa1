#pragma once

#include <stdexcept>
#include <string>

namespace ppk {

/// Caller passed arguments that violate an operation's precondition
/// (order mismatch, out-of-range bound, malformed text).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rational function evaluated at a pole.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Floating-point iteration failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ppk
