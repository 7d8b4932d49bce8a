#pragma once

#include <stdexcept>
#include <string>

namespace tsl {

/// Argument outside the mathematical domain of an operation
/// (index out of range, dimension too small, wrong parity, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operation rejected because it relies on the sigma != 0 assumption
/// of the eigenvector and conditioning formulas.
struct UnsupportedStructureError : DomainError {
  using DomainError::DomainError;
};

/// Definiteness required but not satisfied. Carries the eigenvalue
/// that violates the sign condition.
struct NotPositiveDefiniteError : DomainError {
  NotPositiveDefiniteError(const std::string& what, double lambda)
      : DomainError(what), offending_lambda(lambda) {}

  double offending_lambda;
};

/// A configured resource cap (e.g. dense realization size) was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tsl
