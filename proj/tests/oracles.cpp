// SPDX-License-Identifier: Apache-2.0
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

namespace codebounds::oracles {

Poly orthogonal_by_linear_system(const std::vector<Rational>& points,
                                 const std::vector<Rational>& weights, long k,
                                 const Rational& norm_point) {
  // Rows: <Q, x^m> = 0 for m < k, plus Q(norm_point) = 1; unknowns = coeffs.
  RatMat A(k + 1, RatVec(k + 1));
  RatVec rhs(k + 1);
  for (long m = 0; m < k; ++m)
    for (long c = 0; c <= k; ++c) {
      Rational s(0);
      for (size_t t = 0; t < points.size(); ++t)
        s += weights[t] * Rational::pow(points[t], m) * Rational::pow(points[t], c);
      A[m][c] = s;
    }
  for (long c = 0; c <= k; ++c) A[k][c] = Rational::pow(norm_point, c);
  rhs[k] = Rational(1);
  auto x = rat_solve(A, rhs);
  if (!x) throw std::runtime_error("oracle: singular orthogonality system");
  return Poly(*x);
}

Poly gegenbauer_by_linear_system(long n, long k) {
  std::vector<Rational> mom(2 * k + 1);
  mom[0] = Rational(1);
  for (long s = 1; 2 * s <= 2 * k; ++s)
    mom[2 * s] = mom[2 * s - 2] * Rational(2 * s - 1, n + 2 * s - 2);
  RatMat A(k + 1, RatVec(k + 1));
  RatVec rhs(k + 1);
  for (long m = 0; m < k; ++m)
    for (long c = 0; c <= k; ++c) A[m][c] = (m + c) % 2 == 0 ? mom[m + c] : Rational(0);
  for (long c = 0; c <= k; ++c) A[k][c] = Rational(1);  // value at t = 1
  rhs[k] = Rational(1);
  auto x = rat_solve(A, rhs);
  if (!x) throw std::runtime_error("oracle: singular moment system");
  return Poly(*x);
}

namespace {

// Vectors of F_q^n as digit arrays; subspace canonicalization by RREF.
using Vec = std::vector<long>;

std::vector<Vec> all_vectors(long n, long q) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    long p = 0;
    while (p < n && ++v[p] == q) v[p++] = 0;
    if (p == n) break;
  }
  return out;
}

long inv_mod(long a, long q) {
  for (long x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  throw std::logic_error("inv_mod");
}

// RREF of a list of vectors over F_q (q prime); returns canonical basis.
std::vector<Vec> rref(std::vector<Vec> rows, long q) {
  size_t r = 0;
  long n = rows.empty() ? 0 : static_cast<long>(rows[0].size());
  for (long c = 0; c < n && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] % q == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    long inv = inv_mod(((rows[r][c] % q) + q) % q, q);
    for (long t = 0; t < n; ++t) rows[r][t] = rows[r][t] * inv % q;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] % q == 0) continue;
      long f = rows[i][c] % q;
      for (long t = 0; t < n; ++t) rows[i][t] = ((rows[i][t] - f * rows[r][t]) % q + q) % q;
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::set<std::vector<Vec>> subspaces_of_dim(long n, long w, long q) {
  auto vecs = all_vectors(n, q);
  std::set<std::vector<Vec>> found;
  // span every w-tuple of vectors; keep those with rank w
  std::vector<size_t> idx(w, 0);
  while (true) {
    std::vector<Vec> tuple;
    for (long t = 0; t < w; ++t) tuple.push_back(vecs[idx[t]]);
    auto basis = rref(tuple, q);
    if (static_cast<long>(basis.size()) == w) found.insert(basis);
    long p = w - 1;
    while (p >= 0 && ++idx[p] == vecs.size()) idx[p--] = 0;
    if (p < 0) break;
  }
  if (w == 0) found.insert({});
  return found;
}

long dim_of_intersection(const std::vector<Vec>& a, const std::vector<Vec>& b, long n, long q) {
  // dim(A cap B) = dim A + dim B - dim(A + B)
  std::vector<Vec> join = a;
  join.insert(join.end(), b.begin(), b.end());
  (void)n;
  return static_cast<long>(a.size() + b.size() - rref(join, q).size());
}

}  // namespace

long count_subspaces(long n, long w, long q) {
  return static_cast<long>(subspaces_of_dim(n, w, q).size());
}

long count_subsets_meeting(long n, long i, long w, long m) {
  long fixed = (1L << i) - 1;  // the first i points
  long count = 0;
  for (long s = 0; s < (1L << n); ++s) {
    if (__builtin_popcountl(s) != w) continue;
    if (__builtin_popcountl(s & fixed) == m) ++count;
  }
  return count;
}

long count_subspaces_meeting(long n, long i, long j, long m, long q) {
  auto I = subspaces_of_dim(n, i, q);
  if (I.empty()) throw std::logic_error("no subspace of the requested dimension");
  const auto& fixed = *I.begin();
  long count = 0;
  for (const auto& y : subspaces_of_dim(n, j, q))
    if (dim_of_intersection(fixed, y, n, q) == m) ++count;
  return count;
}

std::map<long, Rational> harmonic_E_oracle(long n, long k, long i, long j) {
  // X_w = w-subsets of {0..n-1} as sorted bitmask lists.
  auto level = [&](long w) {
    std::vector<long> out;
    for (long s = 0; s < (1L << n); ++s)
      if (__builtin_popcountl(s) == w) out.push_back(s);
    return out;
  };
  auto Xk = level(k), Xi = level(i), Xj = level(j);
  long dk = static_cast<long>(Xk.size());

  // ker delta_k: delta(f)(z) = sum_{x superset of z, |x|=k} f(x), z of size k-1
  RatMat delta;
  if (k >= 1) {
    auto Xkm = level(k - 1);
    delta.assign(Xkm.size(), RatVec(dk));
    for (size_t r = 0; r < Xkm.size(); ++r)
      for (long c = 0; c < dk; ++c)
        if ((Xk[c] & Xkm[r]) == Xkm[r]) delta[r][c] = Rational(1);
  }
  std::vector<RatVec> kernel =
      k >= 1 ? rat_nullspace(delta) : std::vector<RatVec>{};
  if (k == 0) kernel.push_back(RatVec(dk, Rational(1)));  // constants

  // orthogonal projection onto the kernel: P = A (A^T A)^{-1} A^T
  long hk = static_cast<long>(kernel.size());
  RatMat A(dk, RatVec(hk));
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < hk; ++c) A[r][c] = kernel[c][r];
  RatMat At = rat_transpose(A);
  RatMat AtA = rat_mul(At, A);
  RatMat AtA_inv(hk, RatVec(hk));
  for (long c = 0; c < hk; ++c) {
    RatVec e(hk);
    e[c] = Rational(1);
    auto col = rat_solve(AtA, e);
    if (!col) throw std::runtime_error("oracle: Gram matrix singular");
    for (long r = 0; r < hk; ++r) AtA_inv[r][c] = (*col)[r];
  }
  RatMat P = rat_mul(rat_mul(A, AtA_inv), At);

  // inclusion sums psi_{k,i}: (Psi_i f)(y) = sum_{x subset y} f(x)
  auto inclusion = [&](const std::vector<long>& Xw) {
    RatMat m(Xw.size(), RatVec(dk));
    for (size_t r = 0; r < Xw.size(); ++r)
      for (long c = 0; c < dk; ++c)
        if ((Xw[r] & Xk[c]) == Xk[c]) m[r][c] = Rational(1);
    return m;
  };
  RatMat Ei = rat_mul(inclusion(Xi), P);
  RatMat EiEj = rat_mul(Ei, rat_transpose(rat_mul(inclusion(Xj), rat_identity(dk))));
  // E_{k,i,j}(x,y) = |X| * (Psi_i P Psi_j^T)(x,y); P idempotent makes
  // Psi_i P (Psi_j P)^T = Psi_i P Psi_j^T.
  Rational X_size = Rational::pow(Rational(2), n);

  std::map<long, Rational> by_meet;
  for (size_t r = 0; r < Xi.size(); ++r)
    for (size_t c = 0; c < Xj.size(); ++c) {
      long meet = __builtin_popcountl(Xi[r] & Xj[c]);
      Rational val = X_size * EiEj[r][c];
      auto it = by_meet.find(meet);
      if (it == by_meet.end())
        by_meet[meet] = val;
      else if (it->second != val)
        throw std::runtime_error("oracle: E not zonal (distinct values at equal meet)");
    }
  return by_meet;
}

GammaBasis gamma_harmonic_basis(long n, long k) {
  auto level = [&](long w) {
    std::vector<long> out;
    for (long s = 0; s < (1L << n); ++s)
      if (__builtin_popcountl(s) == w) out.push_back(s);
    return out;
  };
  auto Xk = level(k);
  long dk = static_cast<long>(Xk.size());
  std::vector<RatVec> kernel;
  if (k == 0) {
    kernel.push_back(RatVec(dk, Rational(1)));
  } else {
    auto Xkm = level(k - 1);
    RatMat delta(Xkm.size(), RatVec(dk));
    for (size_t r = 0; r < Xkm.size(); ++r)
      for (long c = 0; c < dk; ++c)
        if ((Xk[c] & Xkm[r]) == Xkm[r]) delta[r][c] = Rational(1);
    kernel = rat_nullspace(delta);
  }
  // orthogonalize so that sum_s e_s x e_s / <e_s,e_s> is the projection kernel
  RatVec norms;
  auto dot = [](const RatVec& a, const RatVec& b) {
    Rational s(0);
    for (size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s;
  };
  for (size_t s2 = 0; s2 < kernel.size(); ++s2) {
    for (size_t t = 0; t < s2; ++t) {
      Rational f = dot(kernel[s2], kernel[t]) / norms[t];
      if (f.is_zero()) continue;
      for (size_t u = 0; u < kernel[s2].size(); ++u) kernel[s2][u] -= f * kernel[t][u];
    }
    norms.push_back(dot(kernel[s2], kernel[s2]));
  }
  std::vector<std::vector<std::vector<Rational>>> basis;
  for (long w = k; w <= n - k; ++w) {
    auto Xw = level(w);
    std::vector<std::vector<Rational>> funcs;
    for (const auto& e : kernel) {
      // psi_{k,w}(e)(y) = sum over k-subsets of y, then Fourier to H_n
      RatVec on_level(Xw.size());
      for (size_t yi = 0; yi < Xw.size(); ++yi)
        for (long c = 0; c < dk; ++c)
          if ((Xw[yi] & Xk[c]) == Xk[c]) on_level[yi] += e[c];
      std::vector<Rational> full(1L << n);
      for (long x = 0; x < (1L << n); ++x) {
        Rational v(0);
        for (size_t yi = 0; yi < Xw.size(); ++yi) {
          if (__builtin_popcountl(x & Xw[yi]) % 2 == 0)
            v += on_level[yi];
          else
            v -= on_level[yi];
        }
        full[x] = v;
      }
      funcs.push_back(std::move(full));
    }
    basis.push_back(std::move(funcs));
  }
  return {std::move(basis), std::move(norms)};
}

TripleEnumeration enumerate_triples(long n) {
  TripleEnumeration out;
  std::set<std::array<long, 3>> seen;
  long N = 1L << n;
  for (long x = 0; x < N; ++x)
    for (long y = 0; y < N; ++y)
      for (long z = 0; z < N; ++z) {
        long a = __builtin_popcountl(y ^ z);
        long b = __builtin_popcountl(x ^ z);
        long c = __builtin_popcountl(x ^ y);
        seen.insert({a, b, c});
      }
  for (const auto& t : seen) out.orbits.push_back({t[0], t[1], t[2]});
  // z-counts for a fixed realizing pair
  for (const auto& t : out.orbits) {
    long c = t.c;
    long x = 0, y = (1L << c) - 1;
    long cnt = 0;
    for (long z = 0; z < N; ++z)
      if (__builtin_popcountl(x ^ z) == t.b && __builtin_popcountl(y ^ z) == t.a) ++cnt;
    out.z_counts[{t.a, t.b, t.c}] = cnt;
  }
  return out;
}

std::optional<Rational> lp_by_vertex_enumeration(const LpProblem& p) {
  size_t nv = p.num_vars();
  if (nv > 5) throw std::invalid_argument("vertex oracle: too many variables");
  // Constraint set: rows (as equalities when tight) plus x_i = 0 planes.
  struct Plane {
    RatVec a;
    Rational b;
  };
  std::vector<Plane> planes;
  for (const auto& r : p.rows) planes.push_back({r.coeffs, r.rhs});
  for (size_t i = 0; i < nv; ++i) {
    RatVec e(nv);
    e[i] = Rational(1);
    planes.push_back({e, Rational(0)});
  }
  auto feasible = [&](const RatVec& x) {
    for (const auto& v : x)
      if (v.sign() < 0) return false;
    for (const auto& r : p.rows) {
      Rational lhs(0);
      for (size_t i = 0; i < nv; ++i) lhs += r.coeffs[i] * x[i];
      if (r.rel == Relation::LessEq && lhs > r.rhs) return false;
      if (r.rel == Relation::GreaterEq && lhs < r.rhs) return false;
      if (r.rel == Relation::Eq && lhs != r.rhs) return false;
    }
    return true;
  };
  std::optional<Rational> best;
  std::vector<size_t> comb(nv);
  size_t np = planes.size();
  std::vector<bool> select(np, false);
  std::fill(select.end() - nv, select.end(), true);
  do {
    RatMat A;
    RatVec b;
    for (size_t t = 0; t < np; ++t)
      if (select[t]) {
        A.push_back(planes[t].a);
        b.push_back(planes[t].b);
      }
    auto x = rat_solve(A, b);
    if (!x || !feasible(*x)) continue;
    Rational val = p.objective_constant;
    for (size_t i = 0; i < nv; ++i) val += p.objective[i] * (*x)[i];
    if (!best || (p.maximize ? val > *best : val < *best)) best = val;
  } while (std::next_permutation(select.begin(), select.end()));
  return best;
}

int alpha_brute_force(const Graph& g) {
  if (g.n > 20) throw std::invalid_argument("alpha brute force: n too large");
  std::vector<unsigned> adj(g.n, 0);
  for (const auto& e : g.edges) {
    adj[e.first] |= 1u << e.second;
    adj[e.second] |= 1u << e.first;
  }
  int best = 0;
  for (unsigned s = 0; s < (1u << g.n); ++s) {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      if ((s >> v) & 1 && (s & adj[v])) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

namespace {

Graph induced_code_graph(const std::vector<unsigned>& verts, long n, long delta) {
  Graph g;
  g.n = static_cast<int>(verts.size());
  (void)n;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      int d = __builtin_popcount(verts[i] ^ verts[j]);
      if (d > 0 && d < delta) g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  g.normalize();
  return g;
}

int alpha_of_subset(const std::vector<unsigned>& verts, long n, long delta, double cap,
                    bool* exact) {
  if (verts.empty()) return 0;
  auto res = alpha_exhaustive(induced_code_graph(verts, n, delta), cap);
  if (!res.exact) *exact = false;
  return res.value;
}

}  // namespace

AlphaCodeResult alpha_hamming_exhaustive(long n, long delta, double time_cap_seconds) {
  AlphaCodeResult out;
  out.exact = true;
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration<double>(time_cap_seconds);
  auto remaining = [&]() {
    return std::chrono::duration<double>(deadline - std::chrono::steady_clock::now()).count();
  };
  // one-point code; all larger codes contain 0 after translation
  int best = 1;
  // level 2: second word e_m = 1^m 0^{n-m}, m the minimum weight
  for (long m = delta; m <= n; ++m) {
    unsigned em = (1u << m) - 1;
    // level 3: third word canonical under S_m x S_{n-m}: type (a, b) with
    // a ones inside e_m and b ones outside; explored in a fixed type order,
    // branching on the smallest type present.
    struct Type {
      long a, b;
      unsigned rep;
    };
    std::vector<Type> types;
    for (long a = 0; a <= m; ++a)
      for (long b = 0; b <= n - m; ++b) {
        long wt = a + b;
        if (wt < m) continue;  // m is the minimum weight in this branch
        long d_em = (m - a) + b;
        if (d_em < delta || d_em == 0) continue;
        unsigned rep = ((1u << a) - 1) | (((1u << b) - 1) << m);
        types.push_back({a, b, rep});
      }
    // two-word code {0, e_m}
    best = std::max(best, 2);
    for (size_t t = 0; t < types.size(); ++t) {
      std::vector<unsigned> cand;
      for (unsigned v = 0; v < (1u << n); ++v) {
        long wt = __builtin_popcount(v);
        if (wt < m) continue;
        if (__builtin_popcount(v ^ em) < delta) continue;
        if (v == em) continue;
        // type of v and its order index; only types >= t stay
        long av = __builtin_popcount(v & em), bv = wt - av;
        size_t ti = types.size();
        for (size_t u = 0; u < types.size(); ++u)
          if (types[u].a == av && types[u].b == bv) {
            ti = u;
            break;
          }
        if (ti < t) continue;
        if (v == types[t].rep) continue;
        if (__builtin_popcount(v ^ types[t].rep) < delta) continue;
        cand.push_back(v);
      }
      double cap = std::max(1.0, remaining());
      if (cap <= 1.0 && remaining() <= 0) {
        out.exact = false;
        break;
      }
      int sub = alpha_of_subset(cand, n, delta, cap, &out.exact);
      best = std::max(best, 3 + sub);
      if (!out.exact) break;
    }
    if (!out.exact) break;
  }
  out.value = best;
  return out;
}

std::vector<unsigned> random_linear_code(long n, long dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<unsigned> d(0, (1u << n) - 1);
  std::vector<unsigned> gens;
  for (long i = 0; i < dim; ++i) gens.push_back(d(rng));
  std::set<unsigned> words{0u};
  for (unsigned g : gens) {
    std::set<unsigned> next = words;
    for (unsigned w : words) next.insert(w ^ g);
    words = std::move(next);
  }
  return {words.begin(), words.end()};
}

std::vector<unsigned> dual_code(const std::vector<unsigned>& code, long n) {
  std::vector<unsigned> dual;
  for (unsigned v = 0; v < (1u << n); ++v) {
    bool ok = true;
    for (unsigned c : code)
      if (__builtin_popcount(v & c) % 2 != 0) {
        ok = false;
        break;
      }
    if (ok) dual.push_back(v);
  }
  return dual;
}

}  // namespace codebounds::oracles
