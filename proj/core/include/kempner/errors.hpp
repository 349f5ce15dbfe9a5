#pragma once

#include <stdexcept>
#include <string>

namespace kempner {

// Argument outside the mathematical domain of an operation (b < 2, j = 0 for
// the scaled power-sum polynomial, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource ceiling was hit (enumeration guard, precision cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floating-point root finding failed to meet its residual target.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An asserted working hypothesis was violated at runtime. Always a bug or a
// broken assumption, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kempner
