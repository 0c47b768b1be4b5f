// SPDX-License-Identifier: Apache-2.0
#include "codebounds/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace codebounds {

namespace {
mpz_class mpz_from_ll(long long n) {
  // mpz_class has no long long constructor on LP64 it does via long; be explicit.
  mpz_class z;
  if (n >= 0) {
    z = static_cast<unsigned long>(n);
  } else {
    z = static_cast<unsigned long>(-(n + 1));
    z += 1;
    z = -z;
  }
  return z;
}
}  // namespace

Rational::Rational(long long n) : v_(mpz_from_ll(n)) {}

Rational::Rational(long long num, long long den)
    : Rational(mpz_from_ll(num), mpz_from_ll(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      mpz_class n(std::string(s), 10);
      return Rational(n);
    }
    mpz_class n(std::string(s.substr(0, slash)), 10);
    mpz_class d(std::string(s.substr(slash + 1)), 10);
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
  }
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite double");
  Rational r;
  mpq_set_d(r.v_.get_mpq_t(), x);
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r.v_ = -r.v_;
  return r;
}

Rational Rational::pow(const Rational& x, long e) {
  if (e < 0) {
    if (x.is_zero()) throw std::domain_error("Rational::pow: 0 to a negative power");
    return Rational(1) / pow(x, -e);
  }
  Rational acc(1), base = x;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.v_ = -a.v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class binomial_mpz(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Rational rat_binomial(long n, long k) { return Rational(binomial_mpz(n, k)); }

Rational rational_approx(const Rational& x, const Rational& eps) {
  if (eps.sign() <= 0) throw std::domain_error("rational_approx: eps must be > 0");
  // Continued-fraction convergents p_k/q_k of x; stop at the first within eps.
  mpz_class p0 = 1, q0 = 0;  // p_{-1}/q_{-1}
  mpz_class num = x.num(), den = x.den();
  mpz_class a;
  mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpz_class p1 = a, q1 = 1;
  mpz_class rem = num - a * den;
  while (true) {
    Rational conv((p1), (q1));
    if ((conv - x).abs() <= eps) return conv;
    if (rem == 0) return conv;  // exact
    // next CF step: 1/(rem/den)
    mpz_class nn = den, dd = rem;
    mpz_fdiv_q(a.get_mpz_t(), nn.get_mpz_t(), dd.get_mpz_t());
    rem = nn - a * dd;
    den = dd;
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
}

}  // namespace codebounds
