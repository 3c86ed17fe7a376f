#pragma once

#include <stdexcept>
#include <string>

namespace tlz {

/// Malformed textual input: bad JSON, bad fraction syntax, non-reduced
/// fractions, out-of-range or duplicate indices, unknown kinds or parts.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural mismatch between objects that are otherwise well-formed:
/// incompatible dimensions, wrong tensor arity, wrong operator shape.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix inverse was required but the matrix is singular.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request that is well-formed but outside the supported surface
/// (e.g. solving for an operator class whose defining identity is not
/// linear in the unknown operator).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated-polynomial arithmetic exceeded the fixed degree cap.
class DegreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tlz
