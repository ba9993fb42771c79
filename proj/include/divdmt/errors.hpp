#ifndef DIVDMT_ERRORS_HPP
#define DIVDMT_ERRORS_HPP

#include <stdexcept>

namespace divdmt {

/// Malformed request: unknown names, mismatched dimensions, invalid
/// configuration values. The CLI maps this to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed request outside the mathematical domain of an operation.
/// The CLI maps this (and its subclasses) to exit status 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested enumeration or decoder would exceed a size cap.
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The operation is not available for this algebra or group.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace divdmt

#endif  // DIVDMT_ERRORS_HPP
