#pragma once

#include <stdexcept>
#include <string>

namespace gsc {

/// Argument outside an operation's domain (x <= 0, j out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A hypothesis of a closed form does not hold for the given input.
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested accuracy cannot be reached, or the working precision is
/// too small for the question asked. Callers refuse instead of guessing.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsc
