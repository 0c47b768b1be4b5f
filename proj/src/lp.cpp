// SPDX-License-Identifier: Apache-2.0
#include "codebounds/lp.hpp"

#include <stdexcept>

#include "codebounds/rat_linalg.hpp"

namespace codebounds {

void LpProblem::validate() const {
  for (const auto& r : rows)
    if (r.coeffs.size() != objective.size())
      throw std::invalid_argument("LpProblem: row length does not match variable count");
  if (!var_names.empty() && var_names.size() != objective.size())
    throw std::invalid_argument("LpProblem: variable name count mismatch");
}

namespace {

// Dense tableau simplex on the equality form  min c^T x, A x = b (b >= 0),
// x >= 0.  Bland's rule throughout: entering = smallest-index column with a
// negative reduced cost, leaving = smallest basic index among the minimum
// ratios.
class Tableau {
 public:
  Tableau(RatMat a, RatVec b, RatVec c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), m_(a_.size()),
        n_(m_ ? a_[0].size() : c_.size()) {}

  // Returns false when unbounded.
  bool run(std::vector<int>& basis, const std::vector<bool>& blocked) {
    // reduced costs maintained implicitly: rc_j = c_j - y^T A_j with
    // y solved from the basis each pivot would be O(m^3); instead keep the
    // classic updated tableau.
    while (true) {
      int enter = -1;
      for (size_t j = 0; j < n_; ++j) {
        if (blocked[j] || is_basic(basis, j)) continue;
        if (reduced_cost(basis, j).sign() < 0) { enter = static_cast<int>(j); break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (size_t i = 0; i < m_; ++i) {
        if (a_[i][enter].sign() <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(basis, leave, enter);
    }
  }

  void pivot(std::vector<int>& basis, int row, int col) {
    Rational inv = Rational(1) / a_[row][col];
    for (size_t j = 0; j < n_; ++j) a_[row][j] *= inv;
    b_[row] *= inv;
    for (size_t i = 0; i < m_; ++i) {
      if (static_cast<int>(i) == row || a_[i][col].is_zero()) continue;
      Rational f = a_[i][col];
      for (size_t j = 0; j < n_; ++j) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis[row] = col;
  }

  Rational reduced_cost(const std::vector<int>& basis, size_t j) const {
    Rational rc = c_[j];
    for (size_t i = 0; i < m_; ++i)
      if (!c_[basis[i]].is_zero()) rc -= c_[basis[i]] * a_[i][j];
    return rc;
  }

  static bool is_basic(const std::vector<int>& basis, size_t j) {
    for (int b : basis)
      if (b == static_cast<int>(j)) return true;
    return false;
  }

  RatMat a_;
  RatVec b_;
  RatVec c_;
  size_t m_, n_;
};

}  // namespace

LpSolution simplex_solve(const LpProblem& p) {
  p.validate();
  const size_t n = p.num_vars();
  const size_t m = p.rows.size();

  // Minimization objective for the internal solver.
  RatVec cmin(n);
  for (size_t j = 0; j < n; ++j) cmin[j] = p.maximize ? -p.objective[j] : p.objective[j];

  // Equality form with slacks; sigma records row negation used to make rhs >= 0.
  std::vector<int> slack_col(m, -1);
  std::vector<Rational> sigma(m, Rational(1));
  size_t n_slack = 0;
  for (const auto& r : p.rows)
    if (r.rel != Relation::Eq) ++n_slack;

  size_t width = n + n_slack;          // artificials appended later
  RatMat a(m, RatVec(width));
  RatVec b(m);
  size_t sc = n;
  for (size_t i = 0; i < m; ++i) {
    const auto& r = p.rows[i];
    for (size_t j = 0; j < n; ++j) a[i][j] = r.coeffs[j];
    b[i] = r.rhs;
    if (r.rel == Relation::LessEq) {
      a[i][sc] = Rational(1);
      slack_col[i] = static_cast<int>(sc++);
    } else if (r.rel == Relation::GreaterEq) {
      a[i][sc] = Rational(-1);
      slack_col[i] = static_cast<int>(sc++);
    }
    if (b[i].sign() < 0) {
      sigma[i] = Rational(-1);
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  }

  // Initial basis: direct slack where its coefficient is +1, else artificial.
  std::vector<int> basis(m, -1);
  std::vector<size_t> artificial_rows;
  for (size_t i = 0; i < m; ++i) {
    if (slack_col[i] >= 0 && a[i][slack_col[i]] == Rational(1))
      basis[i] = slack_col[i];
    else
      artificial_rows.push_back(i);
  }
  size_t n_art = artificial_rows.size();
  for (auto& row : a) row.resize(width + n_art);
  for (size_t t = 0; t < n_art; ++t) {
    a[artificial_rows[t]][width + t] = Rational(1);
    basis[artificial_rows[t]] = static_cast<int>(width + t);
  }

  LpSolution sol;

  // Phase 1.
  if (n_art > 0) {
    RatVec c1(width + n_art);
    for (size_t t = 0; t < n_art; ++t) c1[width + t] = Rational(1);
    Tableau t1(a, b, c1);
    std::vector<bool> blocked(width + n_art, false);
    if (!t1.run(basis, blocked))
      throw std::logic_error("simplex: phase 1 cannot be unbounded");
    Rational art_sum(0);
    for (size_t i = 0; i < m; ++i)
      if (basis[i] >= static_cast<int>(width)) art_sum += t1.b_[i];
    if (!art_sum.is_zero()) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Drive remaining artificials out of the basis.
    for (size_t i = 0; i < m; ++i) {
      if (basis[i] < static_cast<int>(width)) continue;
      int col = -1;
      for (size_t j = 0; j < width; ++j)
        if (!t1.a_[i][j].is_zero()) { col = static_cast<int>(j); break; }
      if (col >= 0) t1.pivot(basis, static_cast<int>(i), col);
      // else: redundant zero row; its artificial stays basic at value 0,
      // which is harmless once the column is blocked in phase 2.
    }
    a = std::move(t1.a_);
    b = std::move(t1.b_);
  }

  // Phase 2.
  RatVec c2(width + n_art);
  for (size_t j = 0; j < n; ++j) c2[j] = cmin[j];
  Tableau t2(std::move(a), std::move(b), c2);
  std::vector<bool> blocked(width + n_art, false);
  for (size_t t = 0; t < n_art; ++t) blocked[width + t] = true;
  if (!t2.run(basis, blocked)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.primal.assign(n, Rational(0));
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= 0 && basis[i] < static_cast<int>(n)) sol.primal[basis[i]] = t2.b_[i];

  Rational min_value(0);
  for (size_t j = 0; j < n; ++j)
    if (!sol.primal[j].is_zero()) min_value += cmin[j] * sol.primal[j];
  sol.value = (p.maximize ? -min_value : min_value) + p.objective_constant;

  // Duals of the equality form: solve B^T y = c_B exactly, then undo the row
  // scaling and the maximize negation.
  if (m > 0) {
    RatMat a_eq(m, RatVec(m));
    RatVec c_b(m);
    // Rebuild the untouched equality-form columns of the basis.
    // (t2.a_ holds the updated tableau, so reconstruct from the problem.)
    RatMat orig(m, RatVec(width + n_art));
    for (size_t i = 0; i < m; ++i) {
      const auto& r = p.rows[i];
      for (size_t j = 0; j < n; ++j) orig[i][j] = sigma[i] * r.coeffs[j];
      if (slack_col[i] >= 0)
        orig[i][slack_col[i]] = sigma[i] * (r.rel == Relation::LessEq ? Rational(1) : Rational(-1));
    }
    for (size_t t = 0; t < n_art; ++t) orig[artificial_rows[t]][width + t] = Rational(1);
    for (size_t i = 0; i < m; ++i) {
      for (size_t r = 0; r < m; ++r) a_eq[r][i] = orig[r][basis[i]];
      c_b[i] = basis[i] < static_cast<int>(n) ? cmin[basis[i]] : Rational(0);
    }
    auto y = rat_solve(rat_transpose(a_eq), c_b);
    if (!y) throw std::logic_error("simplex: singular basis at optimum");
    sol.dual.assign(m, Rational(0));
    for (size_t i = 0; i < m; ++i) {
      Rational yi = sigma[i] * (*y)[i];
      sol.dual[i] = p.maximize ? -yi : yi;
    }

    // Built-in exact strong-duality check.
    Rational dual_value(0);
    for (size_t i = 0; i < m; ++i) dual_value += sol.dual[i] * p.rows[i].rhs;
    if (dual_value + p.objective_constant != sol.value)
      throw std::logic_error("simplex: strong duality failed");
    for (size_t i = 0; i < m; ++i) {
      int want = 0;
      if (p.rows[i].rel == Relation::LessEq) want = p.maximize ? 1 : -1;
      if (p.rows[i].rel == Relation::GreaterEq) want = p.maximize ? -1 : 1;
      if (want > 0 && sol.dual[i].sign() < 0)
        throw std::logic_error("simplex: dual sign violation");
      if (want < 0 && sol.dual[i].sign() > 0)
        throw std::logic_error("simplex: dual sign violation");
    }
    for (size_t j = 0; j < n; ++j) {
      Rational rc = p.objective[j];
      for (size_t i = 0; i < m; ++i) rc -= sol.dual[i] * p.rows[i].coeffs[j];
      if (p.maximize ? rc.sign() > 0 : rc.sign() < 0)
        throw std::logic_error("simplex: dual infeasible at optimum");
    }
  } else {
    sol.dual.clear();
  }
  return sol;
}

}  // namespace codebounds
