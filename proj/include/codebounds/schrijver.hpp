// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_SCHRIJVER_HPP
#define CODEBOUNDS_SCHRIJVER_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "codebounds/sdp.hpp"
#include "codebounds/zonal.hpp"

namespace codebounds {

/// Canonical triple index: (a, b, c) sorted ascending, one variable per
/// S_3 orbit of distance triples.
using TripleKey = std::array<long, 3>;
TripleKey canonical_triple(long a, long b, long c);
long orbit_size(const TripleKey& t);

/// One nonzero of an exact constraint matrix (constraint 0 = F_0).
struct RatSdpEntry {
  int constraint = 0;
  int block = 0;
  int i = 0;
  int j = 0;
  Rational value;
};

/// The Schrijver triple SDP for binary codes of length n and minimum
/// distance delta, assembled exactly: maximize sum_c x_{0,c,c} + 1 over the
/// canonical surviving triples, subject to nonnegativity, the t-count
/// inequalities, and the two PSD families built from T_k.
struct SchrijverAssembly {
  long n = 0, delta = 0;
  std::vector<TripleKey> vars;        // canonical alive triples, (0,0,0) excluded
  std::map<TripleKey, int> var_index;
  std::vector<SdpBlock> blocks;
  std::vector<RatSdpEntry> entries;   // sorted (constraint, block, i, j)
  std::vector<Rational> objective;    // per variable; bound = 1 + optimum
  std::vector<Rational> var_upper;    // valid upper bounds on each variable

  SdpProblem to_sdp() const;  // float SDPA-form problem, maximize = true
};

SchrijverAssembly build_schrijver(long n, long delta);

/// Exact triple distribution x_{a,b,c} of a code (1/|C| times the number of
/// ordered triples realizing each canonical distance triple).
std::map<TripleKey, Rational> code_triple_distribution(const std::vector<unsigned>& words,
                                                       long n);

/// The distribution mapped onto the assembly's variables. Throws
/// std::domain_error when the code puts mass on a killed triple (d(C) < delta).
std::vector<Rational> assembly_point_from_code(const SchrijverAssembly& a,
                                               const std::vector<unsigned>& words);

struct FeasibilityReport {
  bool feasible = true;
  std::string violation;
};

/// Exact check of every assembled constraint at a rational point.
FeasibilityReport check_feasible_exact(const SchrijverAssembly& a,
                                       const std::vector<Rational>& x);

/// Certified-safe upper bound on card(C) from an approximate dual solution:
/// the dual matrices are rationalized, shifted to exact PSD, and the exact
/// weak-duality margin with the variable bounds absorbs the residuals.
Rational upper_bound_rounding(const SchrijverAssembly& a, const SdpSolution& sol);

struct SchrijverBound {
  SdpStatus status = SdpStatus::NumericalFailure;
  double sdp_value = 0.0;    // 1 + solver objective (approximate)
  Rational safe_bound;       // certified upper bound on card(C)
  mpz_class floored;         // floor(safe_bound), also a valid bound
  SdpSolution solution;
};

SchrijverBound schrijver_bound(long n, long delta, double tol = 1e-8);

}  // namespace codebounds

#endif
