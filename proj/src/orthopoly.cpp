// SPDX-License-Identifier: Apache-2.0
#include "codebounds/orthopoly.hpp"

#include <stdexcept>
#include <string>

namespace codebounds {

Rational qbinomial(long n, long w, long q) {
  if (q < 1) throw std::domain_error("qbinomial: q must be >= 1");
  if (w < 0 || w > n || n < 0) throw std::domain_error("qbinomial: need 0 <= w <= n");
  if (q == 1) return rat_binomial(n, w);
  Rational r(1);
  Rational qq(q);
  for (long i = 0; i < w; ++i)
    r *= (Rational::pow(qq, n - i) - Rational(1)) / (Rational::pow(qq, w - i) - Rational(1));
  return r;
}

Rational bracket(long x, long q) {
  if (x < 0) throw std::domain_error("bracket: x must be >= 0");
  if (q < 1) throw std::domain_error("bracket: q must be >= 1");
  if (q == 1) return Rational(x);
  Rational qinv = Rational(1, q);
  return (Rational::pow(qinv, x) - Rational(1)) / (qinv - Rational(1));
}

Rational weight_w(long n, long q, long i, long j, long u) {
  // Out-of-range u is an empty count, not an error.
  if (u < 0 || u > i) return Rational(0);
  long m = j - i + u;
  if (m < 0 || m > n - i) return Rational(0);
  return qbinomial(i, u, q) * qbinomial(n - i, m, q) * Rational::pow(Rational(q), u * m);
}

namespace {

// binom(t + shift, i) as a polynomial in t: product (t + shift - s)/ (s+1).
Poly binom_poly_rising(long shift, long i) {
  Poly p = Poly::constant(Rational(1));
  for (long s = 0; s < i; ++s) p = p * Poly(std::vector<Rational>{Rational(shift - s), Rational(1)});
  Rational fact(1);
  for (long s = 2; s <= i; ++s) fact *= Rational(s);
  p /= fact;
  return p;
}

// binom(c - t, i) as a polynomial in t.
Poly binom_poly_falling(long c, long i) {
  Poly p = Poly::constant(Rational(1));
  for (long s = 0; s < i; ++s) p = p * Poly(std::vector<Rational>{Rational(c - s), Rational(-1)});
  Rational fact(1);
  for (long s = 2; s <= i; ++s) fact *= Rational(s);
  p /= fact;
  return p;
}

// Discrete Gram-Schmidt: the unique degree-k polynomial orthogonal to all
// lower degrees under the inner product sum_s weight[s] p(pt[s]) r(pt[s]),
// normalized to value 1 at norm_point. Points must be distinct, weights > 0.
Poly discrete_orthogonal(const std::vector<Rational>& pts, const std::vector<Rational>& wts,
                         long k, const Rational& norm_point) {
  if (k < 0) throw std::domain_error("orthogonal polynomial level must be >= 0");
  if (k >= static_cast<long>(pts.size()))
    throw std::domain_error("orthogonal polynomial level exceeds weight support");
  auto ip = [&](const Poly& a, const Poly& b) {
    Rational s(0);
    for (size_t t = 0; t < pts.size(); ++t) s += wts[t] * a(pts[t]) * b(pts[t]);
    return s;
  };
  std::vector<Poly> basis;
  std::vector<Rational> norms;
  for (long d = 0; d <= k; ++d) {
    Poly p = Poly::monomial(static_cast<int>(d));
    for (long l = 0; l < d; ++l) p -= (ip(p, basis[l]) / norms[l]) * basis[l];
    Rational nn = ip(p, p);
    if (nn.is_zero()) throw std::domain_error("degenerate weight system in Gram-Schmidt");
    basis.push_back(p);
    norms.push_back(nn);
  }
  Rational v = basis[k](norm_point);
  if (v.is_zero()) throw std::domain_error("orthogonal polynomial vanishes at normalization point");
  Poly r = basis[k];
  r /= v;
  return r;
}

}  // namespace

Poly krawtchouk(long n, long q, long k) {
  if (q < 2) throw std::domain_error("krawtchouk: q must be >= 2");
  if (k < 0 || k > n) throw std::domain_error("krawtchouk: need 0 <= k <= n");
  Poly sum;
  for (long i = 0; i <= k; ++i) {
    Poly term = binom_poly_rising(0, i) * binom_poly_falling(n, k - i);
    Rational c = Rational::pow(Rational(q - 1), k - i);
    if (i % 2 == 1) c = -c;
    sum += c * term;
  }
  return sum;
}

Poly hahn_johnson(long n, long w, long k) {
  if (w < 0 || w > n) throw std::domain_error("hahn_johnson: need 0 <= w <= n");
  long levels = std::min(w, n - w);
  if (k < 0 || k > levels) throw std::domain_error("hahn_johnson: level exceeds min(w, n-w)");
  std::vector<Rational> pts, wts;
  for (long i = 0; i <= levels; ++i) {
    pts.push_back(Rational(i));
    wts.push_back(rat_binomial(w, i) * rat_binomial(n - w, i));
  }
  return discrete_orthogonal(pts, wts, k, Rational(0));
}

QHahnPoly qhahn(long n, long q, long i, long j, long k) {
  if (!(0 <= i && i <= j && j <= n)) throw std::domain_error("qhahn: need 0 <= i <= j <= n");
  long levels = std::min(i, n - j);
  if (k < 0 || k > levels) throw std::domain_error("qhahn: level exceeds min(i, n-j)");
  std::vector<Rational> pts, wts;
  for (long u = 0; u <= levels; ++u) {
    pts.push_back(bracket(u, q));
    wts.push_back(weight_w(n, q, i, j, u));
  }
  return QHahnPoly{discrete_orthogonal(pts, wts, k, Rational(0)), q};
}

Poly gegenbauer(long n, long k) {
  if (n < 2) throw std::domain_error("gegenbauer: n must be >= 2");
  if (k < 0) throw std::domain_error("gegenbauer: k must be >= 0");
  // Moments of (1-t^2)^{(n-3)/2} on [-1,1] up to the common constant m_0:
  // odd moments vanish, m_{2s}/m_{2s-2} = (2s-1)/(n+2s-2).
  std::vector<Rational> mom(2 * k + 1);
  mom[0] = Rational(1);
  for (long s = 1; 2 * s <= 2 * k; ++s)
    mom[2 * s] = mom[2 * s - 2] * Rational(2 * s - 1, n + 2 * s - 2);
  auto ip = [&](const Poly& a, const Poly& b) {
    Rational s(0);
    for (int x = 0; x <= a.degree(); ++x) {
      if (a.coeff(x).is_zero()) continue;
      for (int y = 0; y <= b.degree(); ++y) {
        int d = x + y;
        if (d % 2 == 1) continue;
        s += a.coeff(x) * b.coeff(y) * mom[d];
      }
    }
    return s;
  };
  std::vector<Poly> basis;
  std::vector<Rational> norms;
  for (long d = 0; d <= k; ++d) {
    Poly p = Poly::monomial(static_cast<int>(d));
    for (long l = 0; l < d; ++l) {
      if ((d - l) % 2 == 1) continue;  // parity makes odd gaps orthogonal already
      p -= (ip(p, basis[l]) / norms[l]) * basis[l];
    }
    Rational nn = ip(p, p);
    if (nn.is_zero()) throw std::domain_error("gegenbauer: degenerate moment system");
    basis.push_back(p);
    norms.push_back(nn);
  }
  Poly r = basis[k];
  r /= r(Rational(1));
  return r;
}

Rational gegenbauer_value_at_one(long n, long k) {
  if (n < 2 || k < 0) throw std::domain_error("gegenbauer_value_at_one: bad parameters");
  Rational v(1);
  for (long j = 1; j <= k; ++j) v *= Rational(n - 3 + 2 * j, 2 * j);
  return v;
}

void FamilyParams::validate() const {
  switch (family) {
    case Family::Krawtchouk:
      if (q < 2) throw std::domain_error("Krawtchouk family requires q >= 2");
      if (n < 1) throw std::domain_error("Krawtchouk family requires n >= 1");
      break;
    case Family::Hahn:
      if (i < 0 || i > n) throw std::domain_error("Hahn family requires 0 <= w <= n");
      break;
    case Family::QHahn:
      if (q < 1) throw std::domain_error("QHahn family requires q >= 1");
      if (!(0 <= i && i <= j && j <= n))
        throw std::domain_error("QHahn family requires 0 <= i <= j <= n");
      break;
    case Family::Gegenbauer:
      if (n < 3) throw std::domain_error("Gegenbauer family requires n >= 3");
      break;
  }
}

long FamilyParams::max_level() const {
  switch (family) {
    case Family::Krawtchouk: return n;
    case Family::Hahn: return std::min(i, n - i);
    case Family::QHahn: return std::min(i, n - j);
    case Family::Gegenbauer: return 1L << 30;  // unbounded in principle
  }
  return 0;
}

Poly FamilyParams::member(long k) const {
  validate();
  switch (family) {
    case Family::Krawtchouk: return krawtchouk(n, q, k);
    case Family::Hahn: return hahn_johnson(n, i, k);
    case Family::QHahn: return qhahn(n, q, i, j, k).in_bracket;
    case Family::Gegenbauer: return gegenbauer_value_at_one(n, k) * gegenbauer(n, k);
  }
  return Poly();
}

std::vector<Rational> expand_in_family(const Poly& p, const FamilyParams& fam) {
  fam.validate();
  long d = std::max(p.degree(), 0);
  if (d > fam.max_level())
    throw std::domain_error("expand_in_family: polynomial degree exceeds family levels");
  std::vector<Poly> members;
  for (long k = 0; k <= d; ++k) members.push_back(fam.member(k));
  // Family member k has exact degree k: back-substitute from the top.
  std::vector<Rational> f(d + 1);
  Poly rem = p;
  for (long k = d; k >= 0; --k) {
    Rational c = rem.coeff(static_cast<int>(k)) / members[k].coeff(static_cast<int>(k));
    f[k] = c;
    rem -= c * members[k];
  }
  if (!rem.is_zero()) throw std::logic_error("expand_in_family: residual after back-substitution");
  return f;
}

Poly recombine_family(const std::vector<Rational>& f, const FamilyParams& fam) {
  Poly p;
  for (size_t k = 0; k < f.size(); ++k) {
    if (f[k].is_zero()) continue;
    p += f[k] * fam.member(static_cast<long>(k));
  }
  return p;
}

}  // namespace codebounds
