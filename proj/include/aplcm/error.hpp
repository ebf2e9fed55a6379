#pragma once

#include <stdexcept>
#include <string>

namespace aplcm {

// Caller passed arguments outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive check would exceed the configured work budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state the mathematics rules out was reached: either a bug here or a
// counterexample to a proven identity.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed serialized data.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aplcm
