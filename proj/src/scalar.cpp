#include "tlz/scalar.hpp"

#include <ostream>

namespace tlz {

namespace {

// Canonical unsigned decimal literal: "0" or a digit string without a
// leading zero.
bool is_canonical_uint(const std::string& s) {
  if (s.empty()) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw ShapeError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Scalar Scalar::parse(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body = body.substr(1);
  }
  std::string num = body;
  std::string den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!is_canonical_uint(num) || !is_canonical_uint(den)) {
    throw ParseError("bad rational literal: \"" + text + "\"");
  }
  if (den == "0") throw ParseError("zero denominator in \"" + text + "\"");
  if (negative && num == "0") throw ParseError("negative zero in \"" + text + "\"");
  mpz_class n(num), d(den);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1 && !(n == 0 && d == 1)) {
    throw ParseError("fraction not in lowest terms: \"" + text + "\"");
  }
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::operator-() const {
  Scalar out;
  out.q_ = -q_;
  return out;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ShapeError("division by zero");
  q_ /= o.q_;
  return *this;
}

Scalar inverse(const Scalar& a) {
  if (a.is_zero()) throw ShapeError("inverse of zero");
  return Scalar(1) / a;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tlz
