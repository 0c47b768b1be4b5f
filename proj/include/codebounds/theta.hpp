// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_THETA_HPP
#define CODEBOUNDS_THETA_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "codebounds/delsarte.hpp"
#include "codebounds/lp.hpp"
#include "codebounds/sdp.hpp"

namespace codebounds {

/// Simple undirected graph: sorted unique edge pairs (i, j) with i < j,
/// no self-loops.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  void normalize();      // sort, dedup, validate; throws on loops/range
  bool has_edge(int i, int j) const;

  static Graph cycle(int q);
  /// Edge-list text format: first line "n m", then m lines "i j" (0-based).
  static Graph read(std::istream& in);
  void write(std::ostream& out) const;
};

enum class ThetaVariant { Theta, ThetaPrime };

/// Vertices at distance in (0, delta) become edges; independent sets are
/// exactly the codes with minimum distance >= delta. Finite spaces only,
/// |X| <= 2^16.
Graph code_graph(const SpaceSpec& space, long delta);

/// theta: max sum B_ij, B psd, tr B = 1, B_ij = 0 on edges (encoded on the
/// matrix side of the SDP). theta': the same with entrywise B >= 0 (encoded
/// through the inequality-form dual program).
SdpProblem theta_sdp(const Graph& g, ThetaVariant variant);

/// Solve and report the theta value.
struct ThetaResult {
  SdpStatus status = SdpStatus::NumericalFailure;
  double value = 0.0;
  SdpSolution solution;
};
ThetaResult theta_solve(const Graph& g, ThetaVariant variant, double tol = 1e-8);

/// q/2 for even q, q cos(pi/q)/(1+cos(pi/q)) for odd q.
double theta_cycle_closed_form(long q);

/// The circulant-symmetrized LP for the cycle: max q f_0, sum f_k = 1,
/// sum f_k cos(2k pi/q) = 0, f >= 0. Returns the problem and its optimum
/// (exact simplex on exact dyadic images of the cosine data).
std::pair<LpProblem, double> theta_cycle_symmetrized_lp(long q);

/// General circulant graph C_q(S): the same LP with one cosine constraint
/// per connection s in S.
std::pair<LpProblem, double> theta_circulant_lp(long q, const std::vector<long>& connections);

struct AlphaResult {
  int value = 0;
  bool exact = false;  // false: time cap hit, value is the best found
  long nodes = 0;
};

/// Exact maximum independent set by branch and bound (greedy clique-cover
/// bound, deterministic order) with a wall-clock cap.
AlphaResult alpha_exhaustive(const Graph& g, double time_cap_seconds = 10.0);

}  // namespace codebounds

#endif
