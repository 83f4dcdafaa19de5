#pragma once

#include <stdexcept>
#include <string>

namespace connsets {

// Caller broke an operation's precondition (empty set, non-tree, u == v, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Input exceeds a configured cap (oracle vertex cap, generation cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Family parameters outside their valid range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6 / edge-list / family-spec text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace connsets
