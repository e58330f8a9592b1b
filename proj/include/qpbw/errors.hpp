#pragma once

#include <stdexcept>
#include <string>

namespace qpbw {

// A request exceeds a configured rank or weight cap.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Caller violated a documented precondition.
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal invariant failed.  These are convention bugs, never user errors,
// and are not meant to be caught.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qpbw
