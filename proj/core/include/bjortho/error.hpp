#pragma once

#include <stdexcept>
#include <string>

namespace bjo {

// Caller supplied input that violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed witness or certificate failed its independent re-check.
// Seeing this means a bug in the library, never bad input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bjo
