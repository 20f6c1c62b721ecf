#pragma once

#include <stdexcept>
#include <string>

namespace mve {

/// Malformed or out-of-range input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algorithm was invoked on an instance outside its domain
/// (e.g. the closed form for complete graphs on a non-complete graph).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An object handed back to the library does not match what the library
/// produced (e.g. lifting a solution that names an unknown kernel edge).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised from cooperative cancellation points once a deadline passes.
class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("deadline exceeded") {}
};

}  // namespace mve
