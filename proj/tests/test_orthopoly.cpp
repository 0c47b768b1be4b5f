// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "codebounds/orthopoly.hpp"
#include "oracles.hpp"

using namespace codebounds;

TEST_SUITE_BEGIN("orthopoly");

TEST_CASE("qbinomial") {
  CHECK(qbinomial(4, 2, 1) == Rational(6));
  // 1-dim subspaces of F_2^2, counted by enumeration: 3
  CHECK(oracles::count_subspaces(2, 1, 2) == 3);
  CHECK(qbinomial(2, 1, 2) == Rational(3));
  CHECK(qbinomial(7, 0, 3) == Rational(1));
  CHECK(qbinomial(4, 2, 2) == Rational(oracles::count_subspaces(4, 2, 2)));
  CHECK(qbinomial(3, 1, 3) == Rational(oracles::count_subspaces(3, 1, 3)));
  CHECK_THROWS_AS(qbinomial(3, 4, 2), std::domain_error);
  CHECK_THROWS_AS(qbinomial(3, -1, 2), std::domain_error);
}

TEST_CASE("bracket") {
  CHECK(bracket(5, 1) == Rational(5));
  CHECK(bracket(0, 7) == Rational(0));
  // (2^-2 - 1)/(2^-1 - 1) = (-3/4)/(-1/2)
  CHECK(bracket(2, 2) == Rational(3, 2));
  CHECK_THROWS_AS(bracket(-1, 2), std::domain_error);
}

TEST_CASE("weight_w") {
  CHECK(weight_w(5, 1, 3, 3, 0) == Rational(1));  // i = j, u = 0: only y = x
  // 2-subsets of a 4-set meeting a fixed 2-subset in exactly one point
  CHECK(oracles::count_subsets_meeting(4, 2, 2, 1) == 4);
  CHECK(weight_w(4, 1, 2, 2, 1) == Rational(4));
  // lines of F_2^3 meeting a fixed line trivially
  CHECK(oracles::count_subspaces_meeting(3, 1, 1, 0, 2) == 6);
  CHECK(weight_w(3, 2, 1, 1, 1) == Rational(6));
  CHECK(weight_w(4, 1, 2, 2, 5) == Rational(0));   // out of range u counts nothing
  CHECK(weight_w(4, 1, 2, 3, 2) == Rational(0));   // j-i+u beyond n-i
  // lemma check across a small grid: w(n,1,j;u) counts subsets
  for (long j = 1; j <= 3; ++j)
    for (long u = 0; u <= 1; ++u)
      CHECK(weight_w(4, 1, 1, j, u) == Rational(oracles::count_subsets_meeting(4, 1, j, 1 - u)));
}

TEST_CASE("krawtchouk basics") {
  CHECK(krawtchouk(6, 2, 0) == Poly::constant(Rational(1)));
  CHECK(krawtchouk(6, 3, 0)(Rational(4)) == Rational(1));
  // K_k(0) = (q-1)^k binom(n,k)
  for (long q : {2L, 3L, 4L})
    for (long k = 0; k <= 5; ++k)
      CHECK(krawtchouk(5, q, k)(Rational(0)) ==
            Rational::pow(Rational(q - 1), k) * rat_binomial(5, k));
  // direct defining-sum evaluation at t = 1
  CHECK(krawtchouk(4, 2, 2)(Rational(1)) == Rational(0));
  auto direct_sum = [](long n, long q, long k, long t) {
    Rational s(0);
    for (long i = 0; i <= k; ++i) {
      Rational term = rat_binomial(t, i) * rat_binomial(n - t, k - i) *
                      Rational::pow(Rational(q - 1), k - i);
      if (i % 2 == 1) term = -term;
      s += term;
    }
    return s;
  };
  for (long q : {2L, 3L})
    for (long k = 0; k <= 4; ++k)
      for (long t = 0; t <= 4; ++t) CHECK(krawtchouk(4, q, k)(Rational(t)) == direct_sum(4, q, k, t));
  for (long k = 0; k <= 6; ++k) CHECK(krawtchouk(6, 2, k).degree() == static_cast<int>(k));
  CHECK_THROWS_AS(krawtchouk(4, 2, 5), std::domain_error);
  CHECK_THROWS_AS(krawtchouk(4, 1, 1), std::domain_error);
}

TEST_CASE("krawtchouk orthogonality, small sweep") {
  for (long q : {2L, 3L}) {
    long n = 6;
    std::vector<Poly> K;
    for (long k = 0; k <= n; ++k) K.push_back(krawtchouk(n, q, k));
    for (long k = 0; k <= n; ++k)
      for (long l = k; l <= n; ++l) {
        Rational s(0);
        for (long w = 0; w <= n; ++w)
          s += rat_binomial(n, w) * Rational::pow(Rational(q - 1), w) * K[k](Rational(w)) *
               K[l](Rational(w));
        Rational expect = k == l ? Rational::pow(Rational(q), n) * rat_binomial(n, k) *
                                       Rational::pow(Rational(q - 1), k)
                                 : Rational(0);
        CHECK(s == expect);
      }
  }
}

TEST_CASE("S_q zonal values: E_L(x,x) = q-1, E_L(x,y) = -1") {
  // the q-set under S_q is the n = 1 Hamming space; level 1 carries L
  for (long q : {2L, 3L, 5L}) {
    Poly e = krawtchouk(1, q, 1);
    CHECK(e(Rational(0)) == Rational(q - 1));
    CHECK(e(Rational(1)) == Rational(-1));
  }
}

TEST_CASE("hahn_johnson") {
  CHECK(hahn_johnson(6, 2, 0) == Poly::constant(Rational(1)));
  // orthogonality of Q_1 against Q_0 under the Johnson weights
  for (long n : {5L, 6L, 8L})
    for (long w = 1; w <= n / 2; ++w) {
      Poly q1 = hahn_johnson(n, w, 1);
      Rational s(0);
      for (long i = 0; i <= w; ++i)
        s += rat_binomial(w, i) * rat_binomial(n - w, i) * q1(Rational(i));
      CHECK(s == Rational(0));
    }
  // frozen from the independent linear-system oracle on the 3-point system
  {
    std::vector<Rational> pts{Rational(0), Rational(1), Rational(2)};
    std::vector<Rational> wts{Rational(1), Rational(8), Rational(6)};
    Poly expect = oracles::orthogonal_by_linear_system(pts, wts, 1, Rational(0));
    CHECK(expect.coeffs() == std::vector<Rational>{Rational(1), Rational(-3, 4)});
    CHECK(hahn_johnson(6, 2, 1) == expect);
    CHECK(hahn_johnson(6, 2, 2) ==
          oracles::orthogonal_by_linear_system(pts, wts, 2, Rational(0)));
  }
  // w > n/2 mirrors to min(w, n-w) levels
  CHECK(hahn_johnson(6, 4, 2) == Poly(hahn_johnson(6, 4, 2).coeffs()));
  CHECK_THROWS_AS(hahn_johnson(6, 2, 3), std::domain_error);
  CHECK_THROWS_AS(hahn_johnson(6, 4, 3), std::domain_error);
}

TEST_CASE("qhahn") {
  CHECK(qhahn(5, 2, 2, 3, 0).in_bracket == Poly::constant(Rational(1)));
  // q = 1 with i = j = w agrees with the Johnson Hahn family
  for (long n : {4L, 6L})
    for (long w = 1; w <= n / 2; ++w)
      for (long k = 0; k <= std::min(w, n - w); ++k)
        CHECK(qhahn(n, 1, w, w, k).in_bracket == hahn_johnson(n, w, k));
  // frozen from the independent oracle: weights 7, 28 at [0] = 0, [1] = 1
  {
    auto qh = qhahn(4, 2, 1, 2, 1);
    std::vector<Rational> pts{bracket(0, 2), bracket(1, 2)};
    std::vector<Rational> wts{weight_w(4, 2, 1, 2, 0), weight_w(4, 2, 1, 2, 1)};
    CHECK(wts == std::vector<Rational>{Rational(7), Rational(28)});
    Poly expect = oracles::orthogonal_by_linear_system(pts, wts, 1, Rational(0));
    CHECK(expect.coeffs() == std::vector<Rational>{Rational(1), Rational(-5, 4)});
    CHECK(qh.in_bracket == expect);
    CHECK(qh(0) == Rational(1));
    CHECK(qh(1) == Rational(-1, 4));
  }
  // orthogonality under the q-Hahn weights, q in {1,2,3}, n <= 8
  for (long q : {1L, 2L, 3L})
    for (long n = 2; n <= (q == 1 ? 8 : 5); ++n)
      for (long i = 0; i <= n; ++i)
        for (long j = i; j <= n; ++j) {
          long levels = std::min(i, n - j);
          for (long k = 0; k <= levels; ++k)
            for (long l = k + 1; l <= levels; ++l) {
              auto qk = qhahn(n, q, i, j, k), ql = qhahn(n, q, i, j, l);
              Rational s(0);
              for (long u = 0; u <= i; ++u)
                s += weight_w(n, q, i, j, u) * qk(u) * ql(u);
              CHECK(s == Rational(0));
            }
        }
  CHECK_THROWS_AS(qhahn(4, 2, 3, 2, 0), std::domain_error);
  CHECK_THROWS_AS(qhahn(4, 2, 1, 2, 2), std::domain_error);
}

TEST_CASE("gegenbauer") {
  CHECK(gegenbauer(5, 0) == Poly::constant(Rational(1)));
  CHECK(gegenbauer(5, 1).coeffs() == std::vector<Rational>{Rational(0), Rational(1)});
  // n = 3 is the Legendre weight; frozen via the moment-system oracle
  Poly leg2 = oracles::gegenbauer_by_linear_system(3, 2);
  CHECK(leg2.coeffs() == std::vector<Rational>{Rational(-1, 2), Rational(0), Rational(3, 2)});
  CHECK(gegenbauer(3, 2) == leg2);
  for (long n : {3L, 4L, 8L})
    for (long k = 0; k <= 6; ++k) {
      Poly p = gegenbauer(n, k);
      CHECK(p.degree() == static_cast<int>(k));
      CHECK(p(Rational(1)) == Rational(1));
      CHECK(p == oracles::gegenbauer_by_linear_system(n, k));
    }
  // determinism: identical inputs, identical coefficients
  CHECK(gegenbauer(8, 6) == gegenbauer(8, 6));
  CHECK(hahn_johnson(8, 3, 2) == hahn_johnson(8, 3, 2));
  CHECK(qhahn(6, 2, 2, 3, 1).in_bracket == qhahn(6, 2, 2, 3, 1).in_bracket);
}

TEST_CASE("expand_in_family") {
  FamilyParams geg8{Family::Gegenbauer, 8, 1, -1, -1};
  // basis element maps to a unit vector
  auto e3 = expand_in_family(geg8.member(3), geg8);
  CHECK(e3 == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});
  // the expansion basis is the classically normalized family; gegenbauer()
  // itself stays at P(1) = 1
  CHECK(geg8.member(3) == gegenbauer_value_at_one(8, 3) * gegenbauer(8, 3));
  CHECK(gegenbauer_value_at_one(8, 1) == Rational(7, 2));
  CHECK(gegenbauer_value_at_one(8, 2) == Rational(63, 8));
  CHECK(gegenbauer_value_at_one(3, 5) == Rational(1));  // Legendre is classical
  // the displayed kissing-number expansion
  Poly F(std::vector<Rational>{Rational(-1, 2), Rational(1)});
  F = F * Poly(std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
  Poly half(std::vector<Rational>{Rational(1, 2), Rational(1)});
  F = F * half * half * Poly(std::vector<Rational>{Rational(1), Rational(1)});
  auto f = expand_in_family(Rational(320, 3) * F, geg8);
  std::vector<Rational> expect{Rational(1),          Rational(16, 7),
                               Rational(200, 63),    Rational(832, 231),
                               Rational(1216, 429),  Rational(5120, 3003),
                               Rational(2560, 4641)};
  CHECK(f == expect);
  // round trip on a random degree-4 polynomial
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<Rational> c;
    for (int i = 0; i <= 4; ++i) c.push_back(Rational(d(rng), 1 + std::abs(d(rng))));
    Poly p(c);
    auto coeffs = expand_in_family(p, geg8);
    CHECK(recombine_family(coeffs, geg8) == p);
  }
  // Krawtchouk expansion round trip too
  FamilyParams kraw{Family::Krawtchouk, 6, 2, -1, -1};
  Poly p(std::vector<Rational>{Rational(2), Rational(-1, 3), Rational(0), Rational(5)});
  CHECK(recombine_family(expand_in_family(p, kraw), kraw) == p);
}

TEST_CASE("binary MacWilliams identity on random linear codes") {
  for (unsigned seed = 0; seed < 8; ++seed) {
    long n = 4 + seed % 5;
    auto C = oracles::random_linear_code(n, 3, seed);
    auto D = oracles::dual_code(C, n);
    std::vector<long> A(n + 1, 0), B(n + 1, 0);
    for (unsigned c : C) ++A[__builtin_popcount(c)];
    for (unsigned d : D) ++B[__builtin_popcount(d)];
    for (long k = 0; k <= n; ++k) {
      Poly kk = krawtchouk(n, 2, k);
      Rational s(0);
      for (long w = 0; w <= n; ++w) s += Rational(A[w]) * kk(Rational(w));
      CHECK(s == Rational(static_cast<long>(C.size())) * Rational(B[k]));
    }
  }
}

TEST_SUITE_END();
