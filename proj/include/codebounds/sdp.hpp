// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_SDP_HPP
#define CODEBOUNDS_SDP_HPP

#include <string>
#include <vector>

#include "codebounds/linalg.hpp"

namespace codebounds {

struct SdpBlock {
  int size = 0;
  bool diagonal = false;  // exported as a negative block size in SDPA files
  friend bool operator==(const SdpBlock&, const SdpBlock&) = default;
};

/// One nonzero of a constraint matrix. constraint 0 is the constant matrix
/// F_0, constraints 1..m belong to the scalar variables. Upper triangle only
/// (i <= j); the matrix is symmetric.
struct SdpEntry {
  int constraint = 0;
  int block = 0;
  int i = 0;
  int j = 0;
  double value = 0.0;
  friend bool operator==(const SdpEntry&, const SdpEntry&) = default;
};

/// Block-structured semidefinite program in SDPA form over scalar variables
/// x: optimize c^T x subject to sum_l x_l F_l - F_0 psd (blockwise).
struct SdpProblem {
  std::vector<SdpBlock> blocks;
  int num_constraints = 0;        // m = number of scalar variables x_l
  std::vector<double> c;          // length m
  std::vector<SdpEntry> entries;  // deterministic order, i <= j
  bool maximize = false;

  void validate() const;  // throws std::invalid_argument
  friend bool operator==(const SdpProblem&, const SdpProblem&) = default;
};

enum class SdpStatus { Optimal, MaxIter, InfeasibleDetected, NumericalFailure };

struct SdpIterRecord {
  double mu = 0, alpha_p = 0, alpha_d = 0, primal_obj = 0, dual_obj = 0;
  double primal_infeas = 0, dual_infeas = 0;
};

/// Both sides of the solved pair. primal_obj is the objective of the scalar
/// variables x (the LMI side, in the problem's own max/min sense); dual_obj
/// is the matrix-side value, an upper bound for maximization problems (lower
/// for minimization) once dual feasibility is tight.
struct SdpSolution {
  SdpStatus status = SdpStatus::NumericalFailure;
  int iterations = 0;
  double primal_obj = 0, dual_obj = 0, gap = 0;
  double primal_infeas = 0, dual_infeas = 0;
  std::vector<double> x;
  std::vector<Matrix> Y;      // dual matrix blocks (certificate side)
  std::vector<Matrix> slack;  // sum x_l F_l - F_0
  std::vector<SdpIterRecord> trace;
};

/// Dense primal-dual interior-point method (HKM direction, Mehrotra
/// predictor-corrector, infeasible start). Deterministic: fixed inputs give
/// identical iterate sequences.
SdpSolution ipm_solve(const SdpProblem& p, double tol = 1e-8, int max_iter = 200);

std::string to_string(SdpStatus s);

}  // namespace codebounds

#endif
