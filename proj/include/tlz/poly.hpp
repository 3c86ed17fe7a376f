#pragma once

#include <string>
#include <vector>

#include "tlz/scalar.hpp"

namespace tlz {

/// Polynomial in one formal parameter s with Scalar coefficients, used for
/// expanding parametrised families exactly. Coefficients are stored dense
/// from degree 0 upward with trailing zeros trimmed; the zero polynomial has
/// an empty coefficient list. Products that would exceed the fixed degree
/// cap raise DegreeError instead of silently truncating.
class PolyScalar {
 public:
  static constexpr int kDegreeCap = 6;

  PolyScalar() = default;
  PolyScalar(const Scalar& constant);  // NOLINT: implicit promotion is the point
  PolyScalar(long constant) : PolyScalar(Scalar(constant)) {}
  explicit PolyScalar(std::vector<Scalar> coeffs);

  /// The polynomial s itself.
  static PolyScalar parameter();

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(int k) const;
  bool is_zero() const { return coeffs_.empty(); }

  Scalar eval(const Scalar& at) const;
  std::string str() const;

  PolyScalar operator-() const;
  PolyScalar& operator+=(const PolyScalar& o);
  PolyScalar& operator-=(const PolyScalar& o);
  PolyScalar& operator*=(const PolyScalar& o);

  friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
  friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
  friend PolyScalar operator*(PolyScalar a, const PolyScalar& b) { return a *= b; }
  friend PolyScalar operator*(const Scalar& a, PolyScalar b);

  friend bool operator==(const PolyScalar& a, const PolyScalar& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const PolyScalar& a, const PolyScalar& b) {
    return !(a == b);
  }

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

}  // namespace tlz
