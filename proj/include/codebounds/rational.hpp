// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_RATIONAL_HPP
#define CODEBOUNDS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace codebounds {

/// Exact arbitrary-precision fraction. Always stored reduced (gcd of
/// numerator and denominator is 1) with a positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n);
  Rational(long long num, long long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument
  /// on malformed input or zero denominator.
  static Rational from_string(std::string_view s);

  /// Exact value of the double (doubles are dyadic rationals).
  /// Throws std::invalid_argument for NaN/infinity.
  static Rational from_double(double x);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  mpz_class floor() const;
  mpz_class ceil() const;
  Rational abs() const;

  /// x^e for integer e (e < 0 requires x != 0).
  static Rational pow(const Rational& x, long e);

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// binomial(n, k) as an exact integer; 0 when k < 0 or k > n.
mpz_class binomial_mpz(long n, long k);
Rational rat_binomial(long n, long k);

/// Simplest rational within eps of x (continued-fraction convergents).
Rational rational_approx(const Rational& x, const Rational& eps);

}  // namespace codebounds

#endif
