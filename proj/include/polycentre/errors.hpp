#pragma once

#include <stdexcept>
#include <string>

namespace polycentre {

/// Structural problem with an input: mismatched dimensions, malformed data.
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A construction invariant failed (duplicate vertices, non-symmetric ball,
/// functional not constant one on the base, ...).
class InvalidConstruction : public std::invalid_argument {
 public:
  explicit InvalidConstruction(const std::string& what)
      : std::invalid_argument(what) {}
};

/// An operation was called outside its stated precondition.
class PreconditionViolation : public std::domain_error {
 public:
  explicit PreconditionViolation(const std::string& what)
      : std::domain_error(what) {}
};

/// A vector lies outside the span reachable by the generators at hand.
class SpanError : public std::domain_error {
 public:
  explicit SpanError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace polycentre
