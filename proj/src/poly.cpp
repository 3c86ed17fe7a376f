#include "tlz/poly.hpp"

#include <algorithm>

namespace tlz {

PolyScalar::PolyScalar(const Scalar& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

PolyScalar::PolyScalar(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) - 1 > kDegreeCap) {
    throw DegreeError("polynomial degree exceeds cap");
  }
  trim();
}

PolyScalar PolyScalar::parameter() {
  PolyScalar p;
  p.coeffs_ = {Scalar(0), Scalar(1)};
  return p;
}

Scalar PolyScalar::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar(0);
  return coeffs_[k];
}

Scalar PolyScalar::eval(const Scalar& at) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

std::string PolyScalar::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = c.str();
    } else {
      std::string power = (k == 1) ? "s" : "s^" + std::to_string(k);
      if (c.is_one()) {
        term = power;
      } else if (c == Scalar(-1)) {
        term = "-" + power;
      } else {
        term = c.str() + "*" + power;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

void PolyScalar::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyScalar PolyScalar::operator-() const {
  PolyScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

PolyScalar& PolyScalar::operator*=(const PolyScalar& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  int deg = degree() + o.degree();
  if (deg > kDegreeCap) throw DegreeError("polynomial degree exceeds cap");
  std::vector<Scalar> out(static_cast<std::size_t>(deg) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyScalar operator*(const Scalar& a, PolyScalar b) {
  for (auto& c : b.coeffs_) c = a * c;
  b.trim();
  return b;
}

}  // namespace tlz
