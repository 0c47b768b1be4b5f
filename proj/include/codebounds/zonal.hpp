// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_ZONAL_HPP
#define CODEBOUNDS_ZONAL_HPP

#include <vector>

#include "codebounds/orthopoly.hpp"
#include "codebounds/rat_linalg.hpp"

namespace codebounds {

/// Distance triple (a,b,c) = (d(y,z), d(x,z), d(x,y)) of three words.
struct TripleOrbit {
  long a = 0, b = 0, c = 0;
  friend bool operator==(const TripleOrbit&, const TripleOrbit&) = default;
};

/// Membership in Omega: even perimeter, a+b+c <= 2n, triangle inequalities.
bool in_omega(long n, const TripleOrbit& t);

/// All of Omega in lexicographic (a,b,c) order.
std::vector<TripleOrbit> omega_enumerate(long n);

/// t(a,b,c) = card{z : d(x,z)=b, d(y,z)=a} for any fixed x,y at distance c.
/// Equals binom(c,i) binom(n-c,a-i) with i = (a-b+c)/2.
Rational t_count(long n, const TripleOrbit& t);

/// Zonal matrices E_k of the Hamming space (q = 1, subsets model) or the
/// projective geometry over F_q (q a prime power), for the stabilizer of a
/// point. Matrix size m_k = n - 2k + 1, indices i,j in [k, n-k].
class HammingZonalFamily {
 public:
  HammingZonalFamily(long n, long q, long k);

  long n() const { return n_; }
  long q() const { return q_; }
  long k() const { return k_; }
  long matrix_size() const { return n_ - 2 * k_ + 1; }
  const Rational& h_k() const { return hk_; }
  const Rational& space_size() const { return X_; }

  /// P_{k,i,j}(0) of eq. (e3): the value of E_{k,i,j}(x,y) at x subset of y.
  Rational prefactor(long i, long j) const;

  /// E_{k,i,j}(x,y) for |x| = x_wt, |y| = y_wt, |x cap y| = meet.
  /// Zero when weights mismatch the indices; i > j goes through the
  /// E_{k,j,i}(y,x) symmetry.
  Rational entry(long i, long j, long x_wt, long y_wt, long meet) const;

  /// T_k(a,b,c) = E_k(x-z, y-z) for any triple realizing the orbit; the
  /// single possibly-nonzero entry sits at row wt(x-z) = b, col wt(y-z) = a.
  /// Binary Hamming only (q = 1).
  RatMat triple_T(const TripleOrbit& orbit) const;

 private:
  long idx(long i) const { return i - k_; }
  long n_, q_, k_;
  Rational hk_, X_;
  // cached for k <= i <= j <= n-k
  std::vector<std::vector<QHahnPoly>> polys_;
  std::vector<std::vector<Rational>> pref_;
};

/// Zonal matrices Y_k^n(u,v,t) of the unit sphere under Stab(e), Theorem
/// "Y": entry (i,j) = P_i^{n+2k}(u) P_j^{n+2k}(v) Q_k^{n-1}(u,v,t), with the
/// normalization constants fixed to 1. Indices i,j run over 0..deg-k.
class SphereZonalFamily {
 public:
  SphereZonalFamily(long n, long k, long deg);

  long n() const { return n_; }
  long k() const { return k_; }
  long matrix_size() const { return deg_ - k_ + 1; }

  /// Throws std::domain_error when (u,v,t) is not realizable (Gram matrix of
  /// (e,x,y) not PSD within 1e-12).
  std::vector<std::vector<double>> eval(double u, double v, double t) const;

 private:
  long n_, k_, deg_;
  std::vector<Poly> p_outer_;  // P_i^{n+2k}, i = 0..deg-k
  Poly p_inner_;               // P_k^{n-1}
};

/// Multi-point analogue for Stab(e_1..e_s): entries u^l v^{l'} Q_k^{n-s},
/// indexed by multi-indices l with |l| <= deg - k in lexicographic order.
std::vector<std::vector<double>> sphere_multipoint_Y(long n, long s, long k, long deg,
                                                     const std::vector<double>& u,
                                                     const std::vector<double>& v, double t);

/// The multi-index order used by sphere_multipoint_Y.
std::vector<std::vector<long>> multi_indices_up_to(long s, long max_total);

}  // namespace codebounds

#endif
