#pragma once

#include <stdexcept>
#include <string>

namespace tspec {

/// Argument outside the mathematical domain of an operation (poles, λ outside
/// the admissible interval, coincident singular points, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller violated a structural precondition (undersized grid, missing
/// Fourier coefficients, invalid configuration).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request is well formed but outside what this library models.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical invariant that should hold by construction was found broken.
class InternalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tspec
