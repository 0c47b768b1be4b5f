// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_POLYNOMIAL_HPP
#define CODEBOUNDS_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "codebounds/rational.hpp"

namespace codebounds {

/// Dense univariate polynomial with exact rational coefficients, index =
/// degree. Trailing zero coefficients are trimmed; the zero polynomial has an
/// empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(int deg, const Rational& coeff = Rational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  Poly derivative() const;
  /// p(c0 + c1*x)
  Poly compose_linear(const Rational& c0, const Rational& c1) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, Poly p);
  friend Poly operator-(const Poly& p);
  Poly& operator*=(const Rational& s);
  Poly& operator/=(const Rational& s);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division: a = q*b + r with deg r < deg b. Throws on b == 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd (gcd of the zero polys is zero).
  static Poly gcd(Poly a, Poly b);

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace codebounds

#endif
