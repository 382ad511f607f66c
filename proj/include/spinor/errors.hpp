#pragma once

#include <stdexcept>
#include <string>

namespace spinor {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input data fails a structural requirement (bad lattice, model mismatch, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Truncated arithmetic cannot decide the requested quantity at this precision.
struct PrecisionError : Error {
  using Error::Error;
};

// Requested base field has no concrete backend.
struct UnsupportedFieldError : Error {
  using Error::Error;
};

// A formal lattice pair behaved in a way impossible for a genuine sublattice.
struct InconsistentPairError : Error {
  using Error::Error;
};

// An operation's mathematical precondition does not hold for the input.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace spinor
