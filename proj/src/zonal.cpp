// SPDX-License-Identifier: Apache-2.0
#include "codebounds/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "codebounds/linalg.hpp"

namespace codebounds {

bool in_omega(long n, const TripleOrbit& t) {
  long a = t.a, b = t.b, c = t.c;
  if (a < 0 || b < 0 || c < 0 || a > n || b > n || c > n) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (a + b + c > 2 * n) return false;
  return c <= a + b && b <= a + c && a <= b + c;
}

std::vector<TripleOrbit> omega_enumerate(long n) {
  if (n < 1) throw std::domain_error("omega_enumerate: n must be >= 1");
  std::vector<TripleOrbit> out;
  for (long a = 0; a <= n; ++a)
    for (long b = 0; b <= n; ++b)
      for (long c = 0; c <= n; ++c) {
        TripleOrbit t{a, b, c};
        if (in_omega(n, t)) out.push_back(t);
      }
  return out;
}

Rational t_count(long n, const TripleOrbit& t) {
  if (!in_omega(n, t)) throw std::domain_error("t_count: triple not in Omega");
  long i = (t.a - t.b + t.c) / 2;
  return rat_binomial(t.c, i) * rat_binomial(n - t.c, t.a - i);
}

HammingZonalFamily::HammingZonalFamily(long n, long q, long k) : n_(n), q_(q), k_(k) {
  if (n < 1) throw std::domain_error("HammingZonalFamily: n must be >= 1");
  if (q < 1) throw std::domain_error("HammingZonalFamily: q must be >= 1");
  if (k < 0 || 2 * k > n) throw std::domain_error("HammingZonalFamily: need 0 <= k <= n/2");
  hk_ = qbinomial(n, k, q) - (k >= 1 ? qbinomial(n, k - 1, q) : Rational(0));
  X_ = Rational(0);
  for (long w = 0; w <= n; ++w) X_ += qbinomial(n, w, q);
  long m = matrix_size();
  polys_.assign(m, {});
  pref_.assign(m, {});
  for (long i = k_; i <= n_ - k_; ++i) {
    polys_[idx(i)].resize(m);
    pref_[idx(i)].resize(m);
    for (long j = i; j <= n_ - k_; ++j) {
      polys_[idx(i)][idx(j)] = qhahn(n_, q_, i, j, k_);
      pref_[idx(i)][idx(j)] = X_ * hk_ * qbinomial(j - k_, i - k_, q_) *
                              qbinomial(n_ - 2 * k_, j - k_, q_) /
                              (qbinomial(n_, j, q_) * qbinomial(j, i, q_)) *
                              Rational::pow(Rational(q_), k_ * (j - k_));
    }
  }
}

Rational HammingZonalFamily::prefactor(long i, long j) const {
  if (i > j) std::swap(i, j);
  if (i < k_ || j > n_ - k_)
    throw std::domain_error("HammingZonalFamily: index outside [k, n-k]");
  return pref_[idx(i)][idx(j)];
}

Rational HammingZonalFamily::entry(long i, long j, long x_wt, long y_wt, long meet) const {
  if (i < k_ || i > n_ - k_ || j < k_ || j > n_ - k_)
    throw std::domain_error("HammingZonalFamily: index outside [k, n-k]");
  if (x_wt != i || y_wt != j) return Rational(0);
  if (meet < 0 || meet > std::min(i, j))
    throw std::domain_error("HammingZonalFamily: invalid intersection size");
  if (i <= j) return pref_[idx(i)][idx(j)] * polys_[idx(i)][idx(j)](i - meet);
  // E_{k,i,j}(x,y) = E_{k,j,i}(y,x)
  return pref_[idx(j)][idx(i)] * polys_[idx(j)][idx(i)](j - meet);
}

RatMat HammingZonalFamily::triple_T(const TripleOrbit& orbit) const {
  if (q_ != 1) throw std::domain_error("triple_T: binary Hamming only (q = 1)");
  if (!in_omega(n_, orbit)) throw std::domain_error("triple_T: triple not in Omega");
  long m = matrix_size();
  RatMat t(m, RatVec(m));
  long a = orbit.a, b = orbit.b, c = orbit.c;
  long meet = (a + b - c) / 2;  // |(x-z) cap (y-z)| for wt(x-z)=b, wt(y-z)=a
  if (b >= k_ && b <= n_ - k_ && a >= k_ && a <= n_ - k_)
    t[idx(b)][idx(a)] = entry(b, a, b, a, meet);
  return t;
}

SphereZonalFamily::SphereZonalFamily(long n, long k, long deg) : n_(n), k_(k), deg_(deg) {
  if (n < 3) throw std::domain_error("SphereZonalFamily: n must be >= 3");
  if (k < 0 || deg < k) throw std::domain_error("SphereZonalFamily: need 0 <= k <= deg");
  for (long i = 0; i + k_ <= deg_; ++i) p_outer_.push_back(gegenbauer(n_ + 2 * k_, i));
  p_inner_ = gegenbauer(n_ - 1, k_);
}

namespace {

void check_gram_psd(const Matrix& g) {
  if (linalg::sym_min_eigenvalue(g) < -1e-12)
    throw std::domain_error("zonal: (u,v,t) not realizable on the sphere (Gram not PSD)");
}

double q_factor(double one_minus_u2, double one_minus_v2, double t_minus_uv, long k,
                const Poly& p_inner) {
  double prod = one_minus_u2 * one_minus_v2;
  if (prod <= 0.0) return k == 0 ? 1.0 : 0.0;  // boundary, by continuity
  double arg = t_minus_uv / std::sqrt(prod);
  arg = std::clamp(arg, -1.0, 1.0);
  return std::pow(prod, 0.5 * static_cast<double>(k)) * p_inner.eval_double(arg);
}

}  // namespace

std::vector<std::vector<double>> SphereZonalFamily::eval(double u, double v, double t) const {
  Matrix g(3, 3);
  g(0, 0) = g(1, 1) = g(2, 2) = 1.0;
  g(0, 1) = g(1, 0) = u;
  g(0, 2) = g(2, 0) = v;
  g(1, 2) = g(2, 1) = t;
  check_gram_psd(g);
  double qk = q_factor(1.0 - u * u, 1.0 - v * v, t - u * v, k_, p_inner_);
  long m = matrix_size();
  std::vector<double> pu(m), pv(m);
  for (long i = 0; i < m; ++i) {
    pu[i] = p_outer_[i].eval_double(u);
    pv[i] = p_outer_[i].eval_double(v);
  }
  std::vector<std::vector<double>> y(m, std::vector<double>(m));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) y[i][j] = pu[i] * pv[j] * qk;
  return y;
}

std::vector<std::vector<long>> multi_indices_up_to(long s, long max_total) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(s, 0);
  // lexicographic enumeration of all l in Z_{>=0}^s with |l| <= max_total
  while (true) {
    long total = 0;
    for (long x : cur) total += x;
    if (total <= max_total) out.push_back(cur);
    long p = s - 1;
    while (p >= 0) {
      ++cur[p];
      long tt = 0;
      for (long x : cur) tt += x;
      if (tt <= max_total) break;
      cur[p] = 0;
      --p;
    }
    if (p < 0) break;
  }
  return out;
}

std::vector<std::vector<double>> sphere_multipoint_Y(long n, long s, long k, long deg,
                                                     const std::vector<double>& u,
                                                     const std::vector<double>& v, double t) {
  if (s < 1 || static_cast<long>(u.size()) != s || static_cast<long>(v.size()) != s)
    throw std::domain_error("sphere_multipoint_Y: bad multi-point dimensions");
  if (n - s < 2) throw std::domain_error("sphere_multipoint_Y: need n - s >= 2");
  if (k < 0 || deg < k) throw std::domain_error("sphere_multipoint_Y: need 0 <= k <= deg");
  Matrix g(static_cast<int>(s) + 2, static_cast<int>(s) + 2);
  for (long i = 0; i < s; ++i) g(i, i) = 1.0;
  g(s, s) = g(s + 1, s + 1) = 1.0;
  for (long i = 0; i < s; ++i) {
    g(i, s) = g(s, i) = u[i];
    g(i, s + 1) = g(s + 1, i) = v[i];
  }
  g(s, s + 1) = g(s + 1, s) = t;
  check_gram_psd(g);

  double u2 = 0.0, v2 = 0.0, uv = 0.0;
  for (long i = 0; i < s; ++i) {
    u2 += u[i] * u[i];
    v2 += v[i] * v[i];
    uv += u[i] * v[i];
  }
  double qk = q_factor(1.0 - u2, 1.0 - v2, t - uv, k, gegenbauer(n - s, k));

  auto idxs = multi_indices_up_to(s, deg - k);
  auto mono = [&](const std::vector<double>& x, const std::vector<long>& l) {
    double p = 1.0;
    for (long i = 0; i < s; ++i) p *= std::pow(x[i], static_cast<double>(l[i]));
    return p;
  };
  size_t m = idxs.size();
  std::vector<std::vector<double>> y(m, std::vector<double>(m));
  std::vector<double> mu(m), mv(m);
  for (size_t i = 0; i < m; ++i) {
    mu[i] = mono(u, idxs[i]);
    mv[i] = mono(v, idxs[i]);
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) y[i][j] = mu[i] * mv[j] * qk;
  return y;
}

}  // namespace codebounds
