// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_STURM_HPP
#define CODEBOUNDS_STURM_HPP

#include <optional>
#include <vector>

#include "codebounds/polynomial.hpp"

namespace codebounds {

/// p with repeated roots collapsed: p / gcd(p, p').
Poly squarefree_part(const Poly& p);

/// Sturm chain of p (p assumed squarefree for root counting, but the chain
/// itself is defined for any p).
std::vector<Poly> sturm_chain(const Poly& p);

/// Number of distinct real roots of squarefree p in the half-open (a, b].
long count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b);

/// Disjoint isolating intervals (lo, hi], each containing exactly one root of
/// squarefree p, restricted to (a, b]. Interval endpoints are non-roots
/// except possibly hi == b.
std::vector<std::pair<Rational, Rational>> isolate_roots(const Poly& p, Rational a, Rational b);

struct SignVerdict {
  bool ok = true;
  Rational witness;  // point with p(witness) > 0 when !ok
};

/// Exact check that p(t) <= 0 for every t in [a, b].
SignVerdict poly_nonpositive_on(const Poly& p, const Rational& a, const Rational& b);

/// Smallest power-of-two-grid rational M (within `slack` of optimal) with
/// p(t) <= M on [a, b]; exact upper bound on the maximum.
Rational poly_max_upper_bound(const Poly& p, const Rational& a, const Rational& b,
                              const Rational& slack);

}  // namespace codebounds

#endif
