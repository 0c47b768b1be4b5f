// SPDX-License-Identifier: Apache-2.0
#include "codebounds/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace codebounds {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(int deg, const Rational& coeff) {
  std::vector<Rational> v(deg + 1);
  v[deg] = coeff;
  return Poly(std::move(v));
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

Rational Poly::leading() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::compose_linear(const Rational& c0, const Rational& c1) const {
  // Horner in the polynomial ring.
  Poly lin(std::vector<Rational>{c0, c1});
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const Rational& s, Poly p) {
  p *= s;
  return p;
}

Poly operator-(const Poly& p) { return Rational(-1) * p; }

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly& Poly::operator/=(const Rational& s) {
  if (s.is_zero()) throw std::domain_error("Poly: division by zero scalar");
  for (auto& c : c_) c /= s;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
  Poly r = a;
  if (a.degree() < b.degree()) return {Poly(), r};
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  Rational lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    Rational f = r.leading() / lead;
    q[d] = f;
    // r -= f * x^d * b
    for (int i = 0; i <= b.degree(); ++i) r.c_[i + d] -= f * b.c_[i];
    r.trim();
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a /= a.leading();
  return a;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    Rational c = c_[i];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    } else if (c.sign() < 0) {
      os << "-";
      c = c.abs();
    }
    first = false;
    bool unit = (c == Rational(1));
    if (i == 0 || !unit) os << c.str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace codebounds
