#pragma once

#include <stdexcept>
#include <string>

namespace moore {

/// Malformed input: bad flags, non-prime characteristic, reducible modulus,
/// exponent-set violations. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold (e.g. asking for
/// the curve threshold of a set with k != 3).
class PreconditionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Arithmetic domain error such as inverting zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration or symbolic computation would exceed its configured budget.
/// The CLI maps this to exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division was requested but the remainder is nonzero.
class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace moore
