// SPDX-License-Identifier: Apache-2.0
#include "codebounds/schrijver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace codebounds {

TripleKey canonical_triple(long a, long b, long c) {
  TripleKey t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

long orbit_size(const TripleKey& t) {
  if (t[0] == t[1] && t[1] == t[2]) return 1;
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return 3;
  return 6;
}

namespace {

bool alive_coord(long x, long delta) { return x == 0 || x >= delta; }

bool alive(const TripleKey& t, long delta) {
  return alive_coord(t[0], delta) && alive_coord(t[1], delta) && alive_coord(t[2], delta);
}

using EntryKey = std::tuple<int, int, int, int>;  // constraint, block, i, j

}  // namespace

SchrijverAssembly build_schrijver(long n, long delta) {
  if (n < 2 || n > 32) throw std::domain_error("build_schrijver: need 2 <= n <= 32");
  if (delta < 2 || delta > n) throw std::domain_error("build_schrijver: need 2 <= delta <= n");

  SchrijverAssembly a;
  a.n = n;
  a.delta = delta;

  auto omega = omega_enumerate(n);
  const TripleKey zero{0, 0, 0};
  for (const auto& t : omega) {
    TripleKey k = canonical_triple(t.a, t.b, t.c);
    if (k == TripleKey{t.a, t.b, t.c} && k != zero && alive(k, delta)) {
      a.var_index.emplace(k, static_cast<int>(a.vars.size()));
      a.vars.push_back(k);
    }
  }
  const int nv = static_cast<int>(a.vars.size());

  const long K = n / 2;  // levels 0..K
  std::vector<HammingZonalFamily> fam;
  for (long k = 0; k <= K; ++k) fam.emplace_back(n, 1, k);

  // blocks: [0..K] condition (5), [K+1..2K+1] condition (6),
  //         [2K+2] nonnegativity diag, [2K+3] t-count inequality diag
  for (long k = 0; k <= K; ++k) a.blocks.push_back({static_cast<int>(n - 2 * k + 1), false});
  for (long k = 0; k <= K; ++k) a.blocks.push_back({static_cast<int>(n - 2 * k + 1), false});
  a.blocks.push_back({nv, true});
  const int nonneg_block = static_cast<int>(2 * K + 2);
  const int tineq_block = static_cast<int>(2 * K + 3);

  std::map<EntryKey, Rational> acc;
  auto add = [&](int constraint, int block, int i, int j, const Rational& v) {
    if (v.is_zero()) return;
    acc[{constraint, block, i, j}] += v;
  };

  // Conditions (5) and (6): accumulate T_k over every ordered triple of
  // Omega, with x_{0,0,0} = 1 substituted into F_0 and killed variables
  // dropped (their x is zero).
  for (const auto& t : omega) {
    TripleKey canon = canonical_triple(t.a, t.b, t.c);
    TripleKey pair_var = canonical_triple(0, t.c, t.c);
    Rational tcnt = t_count(n, t);
    for (long k = 0; k <= K; ++k) {
      if (t.a < k || t.a > n - k || t.b < k || t.b > n - k) continue;
      long meet = (t.a + t.b - t.c) / 2;
      Rational v = fam[k].entry(t.b, t.a, t.b, t.a, meet);
      if (v.is_zero()) continue;
      int bi = static_cast<int>(t.b - k), ai = static_cast<int>(t.a - k);
      int blk5 = static_cast<int>(k), blk6 = static_cast<int>(K + 1 + k);
      // condition (5): + v x_{canon}
      if (canon == zero)
        add(0, blk5, bi, ai, -v);
      else if (alive(canon, delta))
        add(a.var_index.at(canon) + 1, blk5, bi, ai, v);
      // condition (6): + v t(a,b,c) x_{0,c,c}  -  v x_{canon}
      if (t.c == 0)
        add(0, blk6, bi, ai, -v * tcnt);  // x_{0,0,0} = 1
      else if (alive(pair_var, delta))
        add(a.var_index.at(pair_var) + 1, blk6, bi, ai, v * tcnt);
      if (canon == zero)
        add(0, blk6, bi, ai, -(-v));
      else if (alive(canon, delta))
        add(a.var_index.at(canon) + 1, blk6, bi, ai, -v);
    }
  }

  // condition (2): x >= 0
  for (int l = 0; l < nv; ++l) add(l + 1, nonneg_block, l, l, Rational(1));

  // condition (4): x_{a,b,c} <= t(a,b,c) x_{0,c,c}, emitted for every ordered
  // alive triple (the S_3 images supply the other two inequalities), with
  // exact-duplicate rows removed.
  struct Row4 {
    int var_neg;        // x_{a,b,c}
    int var_pos;        // x_{0,c,c}; -1 when it is the constant x_{0,0,0}
    Rational t;
    bool operator<(const Row4& o) const {
      if (var_neg != o.var_neg) return var_neg < o.var_neg;
      if (var_pos != o.var_pos) return var_pos < o.var_pos;
      return t < o.t;
    }
  };
  std::set<Row4> rows4;
  for (const auto& t : omega) {
    TripleKey canon = canonical_triple(t.a, t.b, t.c);
    if (canon == zero || !alive(canon, delta)) continue;
    TripleKey pair_var = canonical_triple(0, t.c, t.c);
    Rational tcnt = t_count(n, t);
    Row4 r;
    r.var_neg = a.var_index.at(canon);
    r.t = tcnt;
    if (t.c == 0) {
      r.var_pos = -1;
    } else {
      if (!alive(pair_var, delta)) continue;  // x_{0,c,c} = 0: row is x <= 0,
                                              // but then canon is killed too,
                                              // so this cannot happen
      r.var_pos = a.var_index.at(pair_var);
      if (r.var_pos == r.var_neg) {
        // (t - 1) x >= 0: vacuous for t >= 1, pins x = 0 for t = 0
        if (tcnt >= Rational(1)) continue;
      }
    }
    rows4.insert(r);
  }
  int nrows4 = static_cast<int>(rows4.size());
  a.blocks.push_back({nrows4, true});
  {
    int r = 0;
    for (const auto& row : rows4) {
      if (row.var_pos == -1) {
        add(0, tineq_block, r, r, -row.t);  // -x + t*1 >= 0
        add(row.var_neg + 1, tineq_block, r, r, Rational(-1));
      } else if (row.var_pos == row.var_neg) {
        add(row.var_neg + 1, tineq_block, r, r, row.t - Rational(1));
      } else {
        add(row.var_pos + 1, tineq_block, r, r, row.t);
        add(row.var_neg + 1, tineq_block, r, r, Rational(-1));
      }
      ++r;
    }
  }

  // condition (8): objective sum_c x_{0,c,c}; the substituted x_{0,0,0}
  // contributes the +1 reported alongside the optimum.
  a.objective.assign(nv, Rational(0));
  for (int l = 0; l < nv; ++l) {
    const auto& v = a.vars[l];
    if (v[0] == 0 && v[1] == v[2] && v[1] > 0) a.objective[l] = Rational(1);
  }

  // valid upper bounds: x_{0,c,c} <= binom(n,c); x_{a,b,c} <= t(a,b,c) binom(n,c)
  a.var_upper.assign(nv, Rational(0));
  for (int l = 0; l < nv; ++l) {
    const auto& v = a.vars[l];
    Rational cap = rat_binomial(n, v[2]);
    if (!(v[0] == 0 && v[1] == v[2]))
      cap *= t_count(n, TripleOrbit{v[0], v[1], v[2]});
    a.var_upper[l] = cap;
  }

  // flatten deterministically; PSD off-diagonal symmetry collapses to i <= j
  for (const auto& [key, val] : acc) {
    auto [cons, blk, i, j] = key;
    if (val.is_zero()) continue;
    if (i > j) continue;  // mirrored below
    if (i < j && !a.blocks[blk].diagonal) {
      auto mirror = acc.find({cons, blk, j, i});
      if (mirror == acc.end() || mirror->second != val)
        throw std::logic_error("build_schrijver: asymmetric PSD accumulation");
    }
    a.entries.push_back({cons, blk, i, j, val});
  }
  return a;
}

SdpProblem SchrijverAssembly::to_sdp() const {
  SdpProblem p;
  p.blocks = blocks;
  p.num_constraints = static_cast<int>(vars.size());
  p.maximize = true;
  p.c.reserve(objective.size());
  for (const auto& v : objective) p.c.push_back(v.to_double());
  for (const auto& e : entries)
    p.entries.push_back({e.constraint, e.block, e.i, e.j, e.value.to_double()});
  return p;
}

std::map<TripleKey, Rational> code_triple_distribution(const std::vector<unsigned>& words,
                                                       long n) {
  if (words.empty()) throw std::domain_error("code_triple_distribution: empty code");
  std::map<TripleKey, long> counts;
  for (unsigned x : words)
    for (unsigned y : words)
      for (unsigned z : words) {
        long aa = __builtin_popcount(y ^ z);
        long bb = __builtin_popcount(x ^ z);
        long cc = __builtin_popcount(x ^ y);
        (void)n;
        ++counts[canonical_triple(aa, bb, cc)];
      }
  // x_{a,b,c} is S_3-symmetric: the canonical variable carries the common
  // value of one ordered pattern, so the orbit-accumulated count divides by
  // the orbit size.
  std::map<TripleKey, Rational> x;
  Rational inv(1, static_cast<long long>(words.size()));
  for (const auto& [k, c] : counts)
    x[k] = Rational(static_cast<long long>(c)) * inv / Rational(orbit_size(k));
  return x;
}

std::vector<Rational> assembly_point_from_code(const SchrijverAssembly& a,
                                               const std::vector<unsigned>& words) {
  auto dist = code_triple_distribution(words, a.n);
  std::vector<Rational> x(a.vars.size(), Rational(0));
  for (const auto& [k, v] : dist) {
    if (k == TripleKey{0, 0, 0}) continue;
    auto it = a.var_index.find(k);
    if (it == a.var_index.end())
      throw std::domain_error("assembly_point_from_code: code has distance below delta");
    x[it->second] = v;
  }
  return x;
}

FeasibilityReport check_feasible_exact(const SchrijverAssembly& a,
                                       const std::vector<Rational>& x) {
  FeasibilityReport rep;
  if (x.size() != a.vars.size())
    throw std::invalid_argument("check_feasible_exact: point size mismatch");
  for (size_t b = 0; b < a.blocks.size(); ++b) {
    int sz = a.blocks[b].size;
    RatMat m(sz, RatVec(sz));
    for (const auto& e : a.entries) {
      if (e.block != static_cast<int>(b)) continue;
      Rational contrib = e.constraint == 0 ? -e.value : x[e.constraint - 1] * e.value;
      m[e.i][e.j] += contrib;
      if (e.i != e.j) m[e.j][e.i] += contrib;
    }
    if (a.blocks[b].diagonal) {
      for (int i = 0; i < sz; ++i)
        if (m[i][i].sign() < 0) {
          rep.feasible = false;
          rep.violation = "diagonal block " + std::to_string(b) + " entry " + std::to_string(i) +
                          " = " + m[i][i].str();
          return rep;
        }
    } else if (!rat_psd(m)) {
      rep.feasible = false;
      rep.violation = "PSD block " + std::to_string(b) + " not positive semidefinite";
      return rep;
    }
  }
  return rep;
}

Rational upper_bound_rounding(const SchrijverAssembly& a, const SdpSolution& sol) {
  if (sol.status != SdpStatus::Optimal && sol.status != SdpStatus::MaxIter)
    throw std::domain_error("upper_bound_rounding: no usable dual iterate");
  size_t nb = a.blocks.size();
  if (sol.Y.size() != nb) throw std::invalid_argument("upper_bound_rounding: block mismatch");

  // Rationalize the dual blocks and push them exactly into the PSD cone.
  std::vector<RatMat> Y(nb);
  for (size_t b = 0; b < nb; ++b) {
    int sz = a.blocks[b].size;
    RatMat m(sz, RatVec(sz));
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        double v = 0.5 * (sol.Y[b](i, j) + sol.Y[b](j, i));
        m[i][j] = Rational::from_double(v);
      }
    if (a.blocks[b].diagonal) {
      for (int i = 0; i < sz; ++i) {
        for (int j = 0; j < sz; ++j)
          if (i != j) m[i][j] = Rational(0);
        if (m[i][i].sign() < 0) m[i][i] = Rational(0);
      }
    } else if (sz > 0) {
      double lmin = linalg::sym_min_eigenvalue(sol.Y[b]);
      Rational shift = lmin < 0 ? Rational::from_double(-lmin * (1.0 + 1e-9)) : Rational(0);
      shift += Rational(1, 1L << 62) * Rational(1, 1L << 62);
      RatMat shifted = m;
      for (int tries = 0; tries < 64; ++tries) {
        shifted = m;
        for (int i = 0; i < sz; ++i) shifted[i][i] += shift;
        if (rat_psd(shifted)) break;
        shift = shift * Rational(2) + Rational(1, 1L << 40);
        if (tries == 63) throw std::logic_error("upper_bound_rounding: cannot reach PSD cone");
      }
      m = shifted;
    }
    Y[b] = std::move(m);
  }

  // Exact weak duality with residual absorption:
  //   card(C) - 1 = c^T x <= -tr(F_0 Y) + sum_l |tr(F_l Y) + c_l| U_l.
  std::vector<Rational> trFY(a.vars.size() + 1, Rational(0));
  for (const auto& e : a.entries) {
    Rational t = e.value * Y[e.block][e.i][e.j];
    if (e.i != e.j) t += e.value * Y[e.block][e.j][e.i];
    trFY[e.constraint] += t;
  }
  Rational bound = -trFY[0];
  for (size_t l = 0; l < a.vars.size(); ++l) {
    Rational rho = trFY[l + 1] + a.objective[l];
    bound += rho.abs() * a.var_upper[l];
  }
  return bound + Rational(1);
}

SchrijverBound schrijver_bound(long n, long delta, double tol) {
  SchrijverBound out;
  auto a = build_schrijver(n, delta);
  SdpProblem p = a.to_sdp();
  out.solution = ipm_solve(p, tol, 200);
  out.status = out.solution.status;
  out.sdp_value = 1.0 + out.solution.primal_obj;
  if (out.status == SdpStatus::Optimal || out.status == SdpStatus::MaxIter) {
    out.safe_bound = upper_bound_rounding(a, out.solution);
    out.floored = out.safe_bound.floor();
  }
  return out;
}

}  // namespace codebounds
