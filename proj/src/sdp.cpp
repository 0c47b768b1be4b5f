// SPDX-License-Identifier: Apache-2.0
#include "codebounds/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace codebounds {

void SdpProblem::validate() const {
  if (static_cast<int>(c.size()) != num_constraints)
    throw std::invalid_argument("SdpProblem: objective length != num_constraints");
  for (const auto& e : entries) {
    if (e.constraint < 0 || e.constraint > num_constraints)
      throw std::invalid_argument("SdpProblem: entry constraint index out of range");
    if (e.block < 0 || e.block >= static_cast<int>(blocks.size()))
      throw std::invalid_argument("SdpProblem: entry block index out of range");
    if (e.i < 0 || e.j < e.i || e.j >= blocks[e.block].size)
      throw std::invalid_argument("SdpProblem: entry indices invalid (need 0 <= i <= j < size)");
    if (!std::isfinite(e.value)) throw std::invalid_argument("SdpProblem: non-finite entry");
    if (blocks[e.block].diagonal && e.i != e.j)
      throw std::invalid_argument("SdpProblem: off-diagonal entry in diagonal block");
  }
}

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal: return "optimal";
    case SdpStatus::MaxIter: return "max-iter";
    case SdpStatus::InfeasibleDetected: return "infeasible-detected";
    case SdpStatus::NumericalFailure: return "numerical-failure";
  }
  return "?";
}

namespace {

// Canonical pair solved internally:
//   (SP) min tr(C Y)   s.t. tr(A_l Y) = b_l,  Y psd
//   (SD) max b^T u     s.t. sum_l u_l A_l + S = C,  S psd
// with A_l = -F_l, C = -F_0, b = -(min-sense objective), so that (SD) is the
// user's LMI problem with u = x.

struct BlockEntries {
  std::vector<int> i, j;
  std::vector<double> v;
};

struct Work {
  int nblocks = 0;
  int m = 0;
  std::vector<int> bsize;
  // A[l][beta], l = 0..m where l = 0 holds C
  std::vector<std::vector<BlockEntries>> A;
  std::vector<double> b;
};

double trace_sparse(const BlockEntries& e, const Matrix& w) {
  double s = 0.0;
  for (size_t t = 0; t < e.v.size(); ++t) {
    s += e.v[t] * w(e.j[t], e.i[t]);
    if (e.i[t] != e.j[t]) s += e.v[t] * w(e.i[t], e.j[t]);
  }
  return s;
}

void add_sparse(Matrix& dst, const BlockEntries& e, double scale) {
  for (size_t t = 0; t < e.v.size(); ++t) {
    dst(e.i[t], e.j[t]) += scale * e.v[t];
    if (e.i[t] != e.j[t]) dst(e.j[t], e.i[t]) += scale * e.v[t];
  }
}

// U = Sinv * A_l * Y for sparse symmetric A_l.
Matrix sandwich(const Matrix& sinv, const BlockEntries& e, const Matrix& y) {
  const int n = sinv.rows();
  Matrix u(n, n);
  for (size_t t = 0; t < e.v.size(); ++t) {
    int p = e.i[t], q = e.j[t];
    double v = e.v[t];
    for (int r = 0; r < n; ++r) {
      double sp = v * sinv(r, p);
      double sq = v * sinv(r, q);
      for (int cc = 0; cc < n; ++cc) {
        u(r, cc) += sp * y(q, cc);
        if (p != q) u(r, cc) += sq * y(p, cc);
      }
    }
  }
  return u;
}

Matrix dense_mul(const Matrix& a, const Matrix& b) { return linalg::matmul(a, b); }

double block_dot(const Matrix& a, const Matrix& b) {
  double s = 0.0;
  const double* pa = a.data();
  const double* pb = b.data();
  size_t n = static_cast<size_t>(a.rows()) * a.cols();
  for (size_t i = 0; i < n; ++i) s += pa[i] * pb[i];
  return s;
}

// Largest step alpha with M + alpha * dM staying psd, via eigenvalues of
// L^{-1} dM L^{-T}.
double max_step(const Matrix& chol_lower, const Matrix& dm) {
  const int n = chol_lower.rows();
  // W = L^{-1} dM L^{-T}
  Matrix w = dm;
  // forward solve L X = dM (column-wise on rows)
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) {
      double s = w(i, c);
      for (int k = 0; k < i; ++k) s -= chol_lower(i, k) * w(k, c);
      w(i, c) = s / chol_lower(i, i);
    }
  }
  // now solve (L X2^T = W^T): X2 = W L^{-T}
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      double s = w(r, j);
      for (int k = 0; k < j; ++k) s -= chol_lower(j, k) * w(r, k);
      w(r, j) = s / chol_lower(j, j);
    }
  }
  // symmetrize against roundoff
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (w(i, j) + w(j, i));
      w(i, j) = w(j, i) = v;
    }
  double lmin = linalg::sym_min_eigenvalue(w);
  if (lmin >= -1e-14) return std::numeric_limits<double>::infinity();
  return -1.0 / lmin;
}

}  // namespace

SdpSolution ipm_solve(const SdpProblem& p, double tol, int max_iter) {
  p.validate();
  Work wk;
  wk.nblocks = static_cast<int>(p.blocks.size());
  wk.m = p.num_constraints;
  for (const auto& b : p.blocks) wk.bsize.push_back(b.size);

  // minimization objective on the LMI side
  std::vector<double> g(p.c);
  if (p.maximize)
    for (auto& x : g) x = -x;

  wk.b.assign(wk.m, 0.0);
  for (int l = 0; l < wk.m; ++l) wk.b[l] = -g[l];
  wk.A.assign(wk.m + 1, std::vector<BlockEntries>(wk.nblocks));
  for (const auto& e : p.entries) {
    auto& be = wk.A[e.constraint][e.block];
    be.i.push_back(e.i);
    be.j.push_back(e.j);
    be.v.push_back(-e.value);  // A_l = -F_l, C = -F_0
  }

  int total_dim = 0;
  for (int s : wk.bsize) total_dim += s;

  double amax = 0.0;
  for (const auto& e : p.entries) amax = std::max(amax, std::fabs(e.value));
  double bmax = 0.0;
  for (double x : wk.b) bmax = std::max(bmax, std::fabs(x));
  double lam = std::max({10.0, 2.0 * bmax, 2.0 * amax});

  std::vector<Matrix> Y, S;
  for (int s : wk.bsize) {
    Matrix id = Matrix::identity(s);
    Y.push_back(id);
    S.push_back(id);
  }
  for (int b = 0; b < wk.nblocks; ++b)
    for (int i = 0; i < wk.bsize[b]; ++i) {
      Y[b](i, i) = lam;
      S[b](i, i) = lam;
    }
  std::vector<double> u(wk.m, 0.0);

  SdpSolution sol;
  auto user_primal = [&](double dobj_can) { return p.maximize ? dobj_can : -dobj_can; };
  auto user_dual = [&](double pobj_can) { return p.maximize ? pobj_can : -pobj_can; };

  double cmax = 1.0;
  for (const auto& e : p.entries)
    if (e.constraint == 0) cmax = std::max(cmax, std::fabs(e.value));

  int consecutive_tiny_steps = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    // residuals
    std::vector<double> rp(wk.m);
    double pinf = 0.0;
    for (int l = 0; l < wk.m; ++l) {
      double ay = 0.0;
      for (int b = 0; b < wk.nblocks; ++b) ay += trace_sparse(wk.A[l + 1][b], Y[b]);
      rp[l] = wk.b[l] - ay;
      pinf = std::max(pinf, std::fabs(rp[l]));
    }
    pinf /= 1.0 + bmax;

    std::vector<Matrix> Rd;
    double dinf = 0.0;
    for (int b = 0; b < wk.nblocks; ++b) {
      Matrix r(wk.bsize[b], wk.bsize[b]);
      add_sparse(r, wk.A[0][b], 1.0);  // C
      for (int l = 0; l < wk.m; ++l)
        if (!wk.A[l + 1][b].v.empty()) add_sparse(r, wk.A[l + 1][b], -u[l]);
      for (int i = 0; i < wk.bsize[b]; ++i)
        for (int j = 0; j < wk.bsize[b]; ++j) r(i, j) -= S[b](i, j);
      dinf = std::max(dinf, r.max_abs());
      Rd.push_back(std::move(r));
    }
    dinf /= 1.0 + cmax + amax;

    double gap = 0.0;
    for (int b = 0; b < wk.nblocks; ++b) gap += block_dot(Y[b], S[b]);
    double mu = gap / total_dim;

    double pobj = 0.0;  // tr(C Y)
    for (int b = 0; b < wk.nblocks; ++b) pobj += trace_sparse(wk.A[0][b], Y[b]);
    double dobj = 0.0;
    for (int l = 0; l < wk.m; ++l) dobj += wk.b[l] * u[l];

    double relgap = std::fabs(pobj - dobj) / (1.0 + std::fabs(pobj) + std::fabs(dobj));

    sol.iterations = iter;
    sol.primal_obj = user_primal(dobj);
    sol.dual_obj = user_dual(pobj);
    sol.gap = std::fabs(pobj - dobj);
    sol.primal_infeas = pinf;
    sol.dual_infeas = dinf;
    sol.trace.push_back({mu, 0.0, 0.0, sol.primal_obj, sol.dual_obj, pinf, dinf});

    if (relgap <= tol && pinf <= tol && dinf <= tol) {
      sol.status = SdpStatus::Optimal;
      break;
    }
    if (iter == max_iter - 1) {
      sol.status = SdpStatus::MaxIter;
      break;
    }

    double unorm = 0.0;
    for (double x : u) unorm = std::max(unorm, std::fabs(x));
    if (unorm > 1e14 * lam) {
      sol.status = SdpStatus::InfeasibleDetected;
      break;
    }

    // factorizations
    std::vector<Matrix> Lc, Sinv, Ly;
    bool fact_ok = true;
    for (int b = 0; b < wk.nblocks; ++b) {
      Matrix ls = S[b];
      Matrix ly = Y[b];
      if (!linalg::cholesky(ls) || !linalg::cholesky(ly)) {
        fact_ok = false;
        break;
      }
      Sinv.push_back(linalg::chol_inverse(ls));
      Lc.push_back(std::move(ls));
      Ly.push_back(std::move(ly));
    }
    if (!fact_ok) {
      sol.status = SdpStatus::NumericalFailure;
      break;
    }

    // Schur complement M_{ij} = tr(A_i Y A_j Sinv); assembled column-blocked,
    // each column independent so the loop parallelizes deterministically.
    Matrix M(wk.m, wk.m);
    std::vector<Matrix> SinvRdY(wk.nblocks);
    for (int b = 0; b < wk.nblocks; ++b)
      SinvRdY[b] = dense_mul(dense_mul(Sinv[b], Rd[b]), Y[b]);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    if (linalg::parallel_enabled() && wk.m >= 96)
#endif
    for (int j = 0; j < wk.m; ++j) {
      for (int b = 0; b < wk.nblocks; ++b) {
        const auto& aj = wk.A[j + 1][b];
        if (aj.v.empty()) continue;
        Matrix Uj = sandwich(Sinv[b], aj, Y[b]);  // Sinv A_j Y
        for (int i = 0; i < wk.m; ++i) {
          const auto& ai = wk.A[i + 1][b];
          if (ai.v.empty()) continue;
          M(i, j) += trace_sparse(ai, Uj);
        }
      }
    }
    for (int i = 0; i < wk.m; ++i)
      for (int j = i + 1; j < wk.m; ++j) {
        double v = 0.5 * (M(i, j) + M(j, i));
        M(i, j) = M(j, i) = v;
      }

    Matrix Mf = M;
    double jitter = 0.0;
    {
      double tr = 0.0;
      for (int i = 0; i < wk.m; ++i) tr += M(i, i);
      double base = std::max(tr / std::max(1, wk.m), 1.0);
      while (!linalg::cholesky(Mf)) {
        jitter = (jitter == 0.0) ? 1e-14 * base : jitter * 100.0;
        if (jitter > 1e2 * base) break;
        Mf = M;
        for (int i = 0; i < wk.m; ++i) Mf(i, i) += jitter;
      }
      if (jitter > 1e2 * base) {
        sol.status = SdpStatus::NumericalFailure;
        break;
      }
    }

    auto solve_direction = [&](double nu, const std::vector<Matrix>* corr,
                               std::vector<double>& du, std::vector<Matrix>& dY,
                               std::vector<Matrix>& dS) {
      std::vector<double> rhs(wk.m);
      for (int l = 0; l < wk.m; ++l) {
        double v = rp[l];
        for (int b = 0; b < wk.nblocks; ++b) {
          const auto& al = wk.A[l + 1][b];
          if (al.v.empty()) continue;
          v += trace_sparse(al, Y[b]);
          if (nu != 0.0) v -= nu * trace_sparse(al, Sinv[b]);
          v += trace_sparse(al, SinvRdY[b]);
          if (corr) v += trace_sparse(al, (*corr)[b]);
        }
        rhs[l] = v;
      }
      du = linalg::chol_solve(Mf, rhs);
      dS.clear();
      dY.clear();
      for (int b = 0; b < wk.nblocks; ++b) {
        Matrix ds = Rd[b];
        for (int l = 0; l < wk.m; ++l)
          if (!wk.A[l + 1][b].v.empty()) add_sparse(ds, wk.A[l + 1][b], -du[l]);
        // dY = nu*Sinv - Y - Sinv*(corrM) - Y dS Sinv ... assembled as
        // sym(nu*Sinv - Y - (Y dS) Sinv - corr)
        Matrix yds = dense_mul(Y[b], ds);
        Matrix t = dense_mul(yds, Sinv[b]);
        Matrix dy(wk.bsize[b], wk.bsize[b]);
        for (int i = 0; i < wk.bsize[b]; ++i)
          for (int j = 0; j < wk.bsize[b]; ++j) {
            double v = nu * Sinv[b](i, j) - Y[b](i, j) - t(i, j);
            if (corr) v -= (*corr)[b](i, j);
            dy(i, j) = v;
          }
        for (int i = 0; i < wk.bsize[b]; ++i)
          for (int j = i + 1; j < wk.bsize[b]; ++j) {
            double v = 0.5 * (dy(i, j) + dy(j, i));
            dy(i, j) = dy(j, i) = v;
          }
        dS.push_back(std::move(ds));
        dY.push_back(std::move(dy));
      }
    };

    // predictor
    std::vector<double> du_a;
    std::vector<Matrix> dY_a, dS_a;
    solve_direction(0.0, nullptr, du_a, dY_a, dS_a);

    auto step_len = [&](const std::vector<Matrix>& L, const std::vector<Matrix>& dM) {
      double a = std::numeric_limits<double>::infinity();
      for (int b = 0; b < wk.nblocks; ++b) a = std::min(a, max_step(L[b], dM[b]));
      return std::min(1.0, 0.98 * a);
    };
    double ap_a = step_len(Ly, dY_a);
    double ad_a = step_len(Lc, dS_a);

    // Mehrotra centering parameter
    double gap_aff = 0.0;
    for (int b = 0; b < wk.nblocks; ++b) {
      Matrix ya = Y[b];
      Matrix sa = S[b];
      for (int i = 0; i < wk.bsize[b]; ++i)
        for (int j = 0; j < wk.bsize[b]; ++j) {
          ya(i, j) += ap_a * dY_a[b](i, j);
          sa(i, j) += ad_a * dS_a[b](i, j);
        }
      gap_aff += block_dot(ya, sa);
    }
    double sigma = std::pow(std::max(gap_aff, 0.0) / gap, 3.0);
    sigma = std::clamp(sigma, 0.01, 0.9);

    // corrector term dY_a dS_a Sinv (enters dY and the rhs)
    std::vector<Matrix> corr(wk.nblocks);
    for (int b = 0; b < wk.nblocks; ++b)
      corr[b] = dense_mul(dense_mul(dY_a[b], dS_a[b]), Sinv[b]);

    std::vector<double> du;
    std::vector<Matrix> dY, dS;
    solve_direction(sigma * mu, &corr, du, dY, dS);

    double ap = step_len(Ly, dY);
    double ad = step_len(Lc, dS);
    sol.trace.back().alpha_p = ap;
    sol.trace.back().alpha_d = ad;

    if (ap < 1e-10 && ad < 1e-10) {
      if (++consecutive_tiny_steps >= 3) {
        sol.status = SdpStatus::NumericalFailure;
        break;
      }
    } else {
      consecutive_tiny_steps = 0;
    }

    for (int b = 0; b < wk.nblocks; ++b)
      for (int i = 0; i < wk.bsize[b]; ++i)
        for (int j = 0; j < wk.bsize[b]; ++j) {
          Y[b](i, j) += ap * dY[b](i, j);
          S[b](i, j) += ad * dS[b](i, j);
        }
    for (int l = 0; l < wk.m; ++l) u[l] += ad * du[l];
  }

  sol.x = u;
  sol.Y = Y;
  sol.slack = S;
  return sol;
}

}  // namespace codebounds
