// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_DELSARTE_HPP
#define CODEBOUNDS_DELSARTE_HPP

#include <string>
#include <vector>

#include "codebounds/lp.hpp"
#include "codebounds/polynomial.hpp"
#include "codebounds/sturm.hpp"

namespace codebounds {

/// A space to bound codes in, together with the distance constraint.
struct SpaceSpec {
  enum class Kind { Hamming, Johnson, Sphere };
  Kind kind = Kind::Hamming;
  long n = 0;        // word length / sphere dimension
  long q = 2;        // Hamming alphabet size
  long w = 0;        // Johnson weight
  long delta = 0;    // minimum distance (finite spaces)
  Rational max_cos;  // sphere: inner products of distinct points <= max_cos

  static SpaceSpec hamming(long n, long q, long delta);
  static SpaceSpec johnson(long n, long w, long delta);
  static SpaceSpec sphere(long n, const Rational& max_cos);

  void validate() const;
  long diameter() const;                // finite spaces
  std::vector<long> forbidden_distances() const;  // D_{>= delta}
  long max_level() const;

  /// Zonal polynomial value at distance d, normalized to 1 at distance 0:
  /// K_k(d)/K_k(0) (Hamming), Q_k(d/2) (Johnson).
  Rational zonal_normalized(long k, long d) const;

  std::string str() const;
};

/// Dual-side polynomial certificate: F = sum f_k \hat P_k with the families
/// normalized to 1 at distance zero (inner product 1 on the sphere). Valid
/// when f_0 > 0, f_k >= 0 and F <= 0 on the forbidden distance set; then
/// |C| <= (f_0+...+f_d)/f_0.
struct LpCertificate {
  SpaceSpec space;
  std::vector<Rational> f;
  Rational claimed_bound;  // zero = unset
};

struct CertVerdict {
  bool valid = false;
  Rational bound;
  std::string reason;
  bool has_witness = false;
  Rational witness;
};

/// Exact verification of an LP certificate (Sturm sign analysis on the
/// sphere, full point check on finite spaces).
CertVerdict verify_certificate(const LpCertificate& cert,
                               const std::vector<Rational>& extra_check_points = {});

/// The primal LP in distance-distribution variables for finite spaces; for
/// the sphere, the sampled LP over the certificate coefficients f_k at
/// `grid_points` Chebyshev nodes on [-1, max_cos].
LpProblem build_lp(const SpaceSpec& space, long degree_cap = 10, long grid_points = 200);

struct LpBoundResult {
  LpStatus status = LpStatus::Optimal;
  bool trivial = false;  // empty forbidden set: bound 1 without solving
  Rational bound;
  LpCertificate certificate;
  LpSolution solution;
};

/// Solve and certify. Finite spaces: exact optimum, certificate from the
/// dual. Sphere: the sampled LP guides; the returned bound always comes from
/// a certificate that passed exact Sturm verification (f_0 is shrunk by an
/// exact bound on the sampling error when needed).
LpBoundResult lp_bound(const SpaceSpec& space, long degree_cap = 10, long grid_points = 200);

enum class SosVerdict { Valid, Invalid, Inconclusive };

struct SosResult {
  SosVerdict verdict = SosVerdict::Inconclusive;
  std::string detail;
  Poly q, qprime;  // exact rational Gram recombinations when valid
};

/// Tries to write -F = Q + Q'(t-a)(b-t) with Q, Q' sums of squares: a small
/// Gram-matrix SDP in floating point, rationalized and re-verified exactly.
/// Valid is only returned after the exact check.
SosResult sos_interval_check(const Poly& f, const Rational& a, const Rational& b);

}  // namespace codebounds

#endif
