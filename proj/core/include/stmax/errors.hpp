#pragma once

#include <stdexcept>
#include <string>

namespace stmax {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data is self-inconsistent (fails an invariant every valid input obeys).
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Input is well-formed but outside the hypotheses of the requested operation.
struct HypothesisError : Error {
  explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

// A computation would exceed a configured size or time budget.
struct ResourceError : Error {
  explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// Malformed text input (profile files, complex files, CLI values).
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace stmax
