#pragma once

#include <stdexcept>
#include <string>

namespace ghlab {

/// Raised when a point or argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point on a removed ray of the requested chart.
class ChartError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A point where the requested object degenerates (axis, polytope boundary,
/// shell, zero section).
class DegenerateError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ghlab
