// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "codebounds/polynomial.hpp"
#include "codebounds/rational.hpp"

using namespace codebounds;

TEST_SUITE_BEGIN("rational");

TEST_CASE("reduction and positive denominator") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("string round trip") {
  for (const char* s : {"0", "-3", "320/3", "-16/7", "123456789123456789123456789/2"}) {
    Rational r = Rational::from_string(s);
    CHECK(r.str() == s);
  }
  CHECK(Rational::from_string("4/6").str() == "2/3");
  CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("from_double is exact") {
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(0.1) != Rational(1, 10));  // 0.1 is not dyadic
  CHECK(Rational::from_double(-3.0) == Rational(-3));
  double x = 0.12345678901234;
  CHECK(Rational::from_double(x).to_double() == x);
}

TEST_CASE("arithmetic") {
  Rational a(2, 3), b(-1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a * b == Rational(-1, 9));
  CHECK(a / b == Rational(-4));
  CHECK((a - a).is_zero());
  CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::pow(Rational(2), -2) == Rational(1, 4));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("floor ceil abs") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
}

TEST_CASE("binomial") {
  CHECK(binomial_mpz(4, 2) == 6);
  CHECK(binomial_mpz(10, 0) == 1);
  CHECK(binomial_mpz(3, 5) == 0);
  CHECK(binomial_mpz(24, 12) == 2704156);
}

TEST_CASE("rational_approx recovers simple fractions") {
  CHECK(rational_approx(Rational::from_double(1.0 / 3.0), Rational(1, 1000000)) ==
        Rational(1, 3));
  CHECK(rational_approx(Rational::from_double(0.25), Rational(1, 1000000)) == Rational(1, 4));
  Rational pi_ish = Rational::from_double(3.141592653589793);
  Rational approx = rational_approx(pi_ish, Rational(1, 100));
  CHECK(approx == Rational(22, 7));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("degree and trimming") {
  Poly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  Poly p(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
  CHECK(p.degree() == 0);
  Poly q(std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(q.degree() == 1);
  CHECK((q - q).is_zero());
}

TEST_CASE("evaluation and arithmetic") {
  // (t+1)(t-2) = t^2 - t - 2
  Poly a(std::vector<Rational>{Rational(1), Rational(1)});
  Poly b(std::vector<Rational>{Rational(-2), Rational(1)});
  Poly p = a * b;
  CHECK(p.coeffs() == std::vector<Rational>{Rational(-2), Rational(-1), Rational(1)});
  CHECK(p(Rational(2)).is_zero());
  CHECK(p(Rational(3)) == Rational(4));
  CHECK(p.eval_double(3.0) == doctest::Approx(4.0));
  CHECK(p.derivative().coeffs() == std::vector<Rational>{Rational(-1), Rational(2)});
}

TEST_CASE("divmod identity") {
  Poly a(std::vector<Rational>{Rational(3), Rational(0), Rational(2), Rational(5)});
  Poly b(std::vector<Rational>{Rational(1), Rational(2)});
  auto [q, r] = Poly::divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK_THROWS_AS(Poly::divmod(a, Poly()), std::domain_error);
}

TEST_CASE("gcd of products") {
  Poly f(std::vector<Rational>{Rational(-1), Rational(1)});   // t-1
  Poly g(std::vector<Rational>{Rational(2), Rational(1)});    // t+2
  Poly h(std::vector<Rational>{Rational(5), Rational(3)});    // 3t+5
  Poly gcd = Poly::gcd(f * g, f * h);
  CHECK(gcd == f);  // monic
}

TEST_CASE("compose_linear") {
  Poly p(std::vector<Rational>{Rational(0), Rational(0), Rational(1)});  // t^2
  Poly q = p.compose_linear(Rational(1), Rational(2));                   // (1+2t)^2
  CHECK(q.coeffs() == std::vector<Rational>{Rational(1), Rational(4), Rational(4)});
}

TEST_SUITE_END();
