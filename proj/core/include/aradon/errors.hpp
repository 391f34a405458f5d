#pragma once

#include <stdexcept>
#include <string>

namespace aradon {

/// Thrown when a precondition on an argument (size, index, range) is violated.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by pearson() and friends when a correlation is undefined.
class CorrelationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace aradon
