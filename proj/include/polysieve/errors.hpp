#pragma once

#include <stdexcept>
#include <string>

namespace polysieve {

/// Argument outside the mathematical domain of an operation (n = 0, repeated
/// nodes, non-prime modulus where a prime is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument is in the domain but violates a documented precondition of the
/// statement being checked (e.g. p | c0 for the spacing check).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Work or modulus exceeds the configured exact-arithmetic budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polysieve
