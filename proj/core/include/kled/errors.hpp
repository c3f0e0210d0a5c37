#pragma once

#include <stdexcept>

namespace kled {

// Argument outside the effective domain of the requested operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameter combination that no admissible case covers.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numeric integration or series summation failed to reach tolerance.
class QuadratureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kled
