// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_LP_HPP
#define CODEBOUNDS_LP_HPP

#include <string>
#include <vector>

#include "codebounds/rational.hpp"

namespace codebounds {

enum class Relation { LessEq, Eq, GreaterEq };

/// Linear program over nonnegative variables with exact rational data.
struct LpProblem {
  struct Row {
    std::vector<Rational> coeffs;
    Relation rel = Relation::LessEq;
    Rational rhs;
  };
  std::vector<std::string> var_names;
  bool maximize = true;
  std::vector<Rational> objective;
  Rational objective_constant;  // added to the reported value
  std::vector<Row> rows;

  size_t num_vars() const { return objective.size(); }
  void validate() const;  // throws std::invalid_argument on shape mismatch
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Dual convention: value = objective_constant + sum_i dual[i] * rhs[i];
/// for a maximization problem LessEq rows carry dual >= 0 and GreaterEq rows
/// dual <= 0 (flipped for minimization), Eq rows are free.
struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};

/// Two-phase exact simplex with Bland's anti-cycling rule. On Optimal the
/// returned solution has passed an exact built-in strong-duality check
/// (primal value equals dual value, dual feasible with the right signs).
LpSolution simplex_solve(const LpProblem& p);

}  // namespace codebounds

#endif
