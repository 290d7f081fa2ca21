#pragma once

#include <stdexcept>
#include <string>

namespace hsq {

/// Malformed arguments: unknown vertex, m < 2 for a pattern, odd length, ...
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rewriting or pattern operation was requested where its precondition fails.
class RuleInapplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured size bound would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computation paths disagreed. Always a bug, never data.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hsq
