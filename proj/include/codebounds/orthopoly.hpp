// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_ORTHOPOLY_HPP
#define CODEBOUNDS_ORTHOPOLY_HPP

#include <vector>

#include "codebounds/polynomial.hpp"
#include "codebounds/rational.hpp"

namespace codebounds {

/// Gaussian binomial coefficient; the ordinary binomial at q = 1.
/// Counts w-dim subspaces of an n-dim space over F_q (q a prime power),
/// respectively w-subsets of an n-set.
Rational qbinomial(long n, long w, long q);

/// The bracket variable [x]: x at q = 1, (q^-x - 1)/(q^-1 - 1) for q > 1.
Rational bracket(long x, long q);

/// Weight w(n,i,j;u) = qbinom(i,u) qbinom(n-i, j-i+u) q^{u(j-i+u)}.
/// Number of y with |y| = j meeting a fixed x with |x| = i in an
/// (i-u)-dimensional intersection. Returns 0 outside the support.
Rational weight_w(long n, long q, long i, long j, long u);

/// Krawtchouk polynomial K_k^{n,q} in the distance variable, expanded into
/// monomial coefficients. K_k(t) = sum_i binom(t,i) binom(n-t,k-i) (-1)^i (q-1)^{k-i}.
Poly krawtchouk(long n, long q, long k);

/// Hahn polynomial Q_k for the Johnson space J_n^w, in the intersection-defect
/// variable i, weights binom(w,i) binom(n-w,i), normalized Q_k(0) = 1.
Poly hahn_johnson(long n, long w, long k);

/// q-Hahn polynomial of parameters (n,i,j): degree k in the bracket variable
/// [x], orthogonal under weight_w(n,q,i,j;u), normalized Q_k(0) = 1.
/// Integer-argument evaluation composes with bracket(x,q).
struct QHahnPoly {
  Poly in_bracket;  // coefficients in the variable [x]
  long q = 1;
  Rational operator()(long x) const { return in_bracket(bracket(x, q)); }
};
QHahnPoly qhahn(long n, long q, long i, long j, long k);

/// Gegenbauer polynomial P_k^n with P_k^n(1) = 1, orthogonal on [-1,1] under
/// (1-t^2)^{(n-3)/2}. Accepts n >= 2 (n = 2 is the Chebyshev weight, needed
/// internally for zonal matrices of S^{n-1} with small n).
Poly gegenbauer(long n, long k);

/// Value at 1 of the classically normalized member (Jacobi (a,a) with
/// a = (n-3)/2): binom(k + (n-3)/2, k) = prod_j (n-3+2j)/(2j). The classical
/// certificate coefficients (kissing number etc.) are quoted in that scaling,
/// so the Gegenbauer expansion basis uses it; see FamilyParams::member.
Rational gegenbauer_value_at_one(long n, long k);

enum class Family { Krawtchouk, Hahn, QHahn, Gegenbauer };

struct FamilyParams {
  Family family = Family::Gegenbauer;
  long n = 0;
  long q = 1;   // ignored by Gegenbauer
  long i = -1;  // QHahn weight indices; Hahn uses i as w
  long j = -1;

  void validate() const;       // throws std::domain_error
  long max_level() const;      // largest usable level
  /// k-th expansion-basis member (QHahn: in the bracket variable). For
  /// Gegenbauer this is the classically normalized polynomial,
  /// gegenbauer_value_at_one(n,k) * gegenbauer(n,k); the other families use
  /// their defining normalization.
  Poly member(long k) const;
};

/// Coefficients f_k with p = sum_k f_k * fam_k, exact. For QHahn the input
/// polynomial is read in the bracket variable.
std::vector<Rational> expand_in_family(const Poly& p, const FamilyParams& fam);

/// Recombines coefficients back into a polynomial (round-trip inverse).
Poly recombine_family(const std::vector<Rational>& f, const FamilyParams& fam);

}  // namespace codebounds

#endif
