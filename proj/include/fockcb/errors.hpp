#pragma once

#include <stdexcept>

namespace fockcb {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed diagrams, invalid nodes, mismatched component counts or ranks.
struct diagram_error : error {
  using error::error;
};

// Exact polynomial division left a remainder or a fractional quotient.
// Signals a convention or logic bug: callers must abort, never truncate.
struct not_divisible_error : error {
  using error::error;
};

// A caller broke a documented precondition.
struct precondition_error : error {
  using error::error;
};

// An internal invariant failed. Always a bug, never user error.
struct invariant_error : error {
  using error::error;
};

// Malformed user-facing input (text grammar, CLI values).
struct usage_error : error {
  using error::error;
};

}  // namespace fockcb
