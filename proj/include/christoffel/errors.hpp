#pragma once

#include <stdexcept>
#include <string>

namespace christoffel {

// Raised when an argument violates an operation's precondition. The message
// names the violated condition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised for out-of-range 1-based factor indices.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Raised when a cross-check between two constructions disagrees. Seeing one
// means a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace christoffel
