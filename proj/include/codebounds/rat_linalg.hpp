// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_RAT_LINALG_HPP
#define CODEBOUNDS_RAT_LINALG_HPP

#include <optional>
#include <vector>

#include "codebounds/rational.hpp"

namespace codebounds {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

RatMat rat_identity(int n);
RatMat rat_transpose(const RatMat& a);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatVec rat_mul_vec(const RatMat& a, const RatVec& x);

/// Solves A x = b for square A. Empty result when A is singular.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

/// Basis of the right nullspace of a (possibly rectangular) matrix.
std::vector<RatVec> rat_nullspace(RatMat a);

/// One particular solution of A x = b for a (possibly rectangular) system.
/// Empty result when the system is inconsistent.
std::optional<RatVec> rat_solve_any(RatMat a, RatVec b);

/// Exact positive-semidefiniteness test for a symmetric rational matrix,
/// by symmetric Gaussian elimination: a PSD matrix with a zero diagonal
/// entry must have the whole row zero.
bool rat_psd(RatMat m);

}  // namespace codebounds

#endif
