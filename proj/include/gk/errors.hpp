#pragma once

#include <stdexcept>
#include <string>

namespace gk {

/// Caller violated a documented precondition (bad prime, out-of-range parameter, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The engine produced a result that contradicts one of the algebraic facts it
/// relies on. Either a bug or a genuine counterexample; never silently ignored.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gk
