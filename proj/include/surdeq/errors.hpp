#pragma once

#include <stdexcept>

namespace surdeq {

// Base for all domain-level failures. Messages name the violated
// precondition so CLI users see what went wrong, not where.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct PerfectSquareRadicand : DomainError {
  using DomainError::DomainError;
};

struct ZeroDenominator : DomainError {
  using DomainError::DomainError;
};

struct EmptyPeriod : DomainError {
  using DomainError::DomainError;
};

struct NotCoprime : DomainError {
  using DomainError::DomainError;
};

struct InvalidDivisor : DomainError {
  using DomainError::DomainError;
};

struct ScanBoundExceeded : DomainError {
  using DomainError::DomainError;
};

struct NotEquivalent : DomainError {
  using DomainError::DomainError;
};

struct DegenerateRow : DomainError {
  using DomainError::DomainError;
};

}  // namespace surdeq
