#pragma once

#include <stdexcept>
#include <string>

namespace pcentral {

// Operands that cannot be combined: mismatched moduli, dimensions or presentations.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but violates a mathematical precondition
// (non-skew matrix, singular transform, commuting generators, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters at which a formula has no meaning, e.g. a non-invertible a*x + b*y.
class DegenerateParameterError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcentral
