#pragma once

#include <stdexcept>
#include <string>

namespace relmo {

/// Input outside an operation's domain (e >= 1, deputy behind the central body, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative or integration procedure failed to produce a result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scenario configuration or CLI input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace relmo
