#pragma once

#include <stdexcept>
#include <string>

namespace flagcsm {

// Malformed input: bad flags, mismatched rings, out-of-range indices.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A partition or hook does not fit the requested rectangle / symmetric group.
struct ShapeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact division failed, two methods disagreed, or a structural
// invariant broke. Always a bug, never a user error.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExactnessError : InvariantViolation {
  using InvariantViolation::InvariantViolation;
};

struct PoleError : InvariantViolation {
  using InvariantViolation::InvariantViolation;
};

}  // namespace flagcsm
