#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "tlz/errors.hpp"

namespace tlz {

/// Exact rational number. Always kept in canonical form: lowest terms,
/// positive denominator, zero represented as 0/1.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q);

  /// Strict parser for "p" or "p/q": optional leading '-', no leading zeros,
  /// positive denominator, fraction already in lowest terms. Anything else
  /// (including "-0", "2/4", "1/-2", whitespace) raises ParseError.
  static Scalar parse(const std::string& text);

  /// Canonical rendering: "p" when the denominator is 1, else "p/q".
  std::string str() const { return q_.get_str(); }
  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  const mpq_class& value() const { return q_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.q_ != b.q_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

Scalar inverse(const Scalar& a);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tlz
