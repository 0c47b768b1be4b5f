// SPDX-License-Identifier: Apache-2.0
#include "codebounds/theta.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace codebounds {

void Graph::normalize() {
  for (auto& e : edges) {
    if (e.first == e.second) throw std::invalid_argument("Graph: self-loop");
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n) throw std::invalid_argument("Graph: vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

Graph Graph::cycle(int q) {
  if (q < 3) throw std::invalid_argument("cycle: need q >= 3");
  Graph g;
  g.n = q;
  for (int i = 0; i < q; ++i) g.edges.emplace_back(i, (i + 1) % q);
  g.normalize();
  return g;
}

Graph Graph::read(std::istream& in) {
  Graph g;
  size_t m = 0;
  if (!(in >> g.n >> m)) throw std::invalid_argument("Graph::read: bad header line");
  for (size_t t = 0; t < m; ++t) {
    int i, j;
    if (!(in >> i >> j)) throw std::invalid_argument("Graph::read: bad edge line");
    g.edges.emplace_back(i, j);
  }
  g.normalize();
  return g;
}

void Graph::write(std::ostream& out) const {
  out << n << " " << edges.size() << "\n";
  for (const auto& e : edges) out << e.first << " " << e.second << "\n";
}

namespace {

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int hamming_dist_baseq(long x, long y, long n, long q) {
  int d = 0;
  for (long p = 0; p < n; ++p) {
    if (x % q != y % q) ++d;
    x /= q;
    y /= q;
  }
  return d;
}

}  // namespace

Graph code_graph(const SpaceSpec& space, long delta) {
  SpaceSpec s = space;
  s.delta = delta;
  s.validate();
  Graph g;
  if (s.kind == SpaceSpec::Kind::Sphere)
    throw std::domain_error("code_graph: finite spaces only");
  if (s.kind == SpaceSpec::Kind::Hamming) {
    double sz = std::pow(static_cast<double>(s.q), static_cast<double>(s.n));
    if (sz > 65536.0) throw std::domain_error("code_graph: space larger than 2^16");
    long N = ipow(s.q, s.n);
    g.n = static_cast<int>(N);
    for (long x = 0; x < N; ++x)
      for (long y = x + 1; y < N; ++y) {
        int d = hamming_dist_baseq(x, y, s.n, s.q);
        if (d > 0 && d < delta) g.edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
      }
  } else {
    // Johnson: w-subsets as bitmasks in increasing numeric order.
    std::vector<long> verts;
    for (long m = 0; m < (1L << s.n); ++m)
      if (__builtin_popcountl(m) == s.w) verts.push_back(m);
    if (verts.size() > 65536) throw std::domain_error("code_graph: space larger than 2^16");
    g.n = static_cast<int>(verts.size());
    for (size_t x = 0; x < verts.size(); ++x)
      for (size_t y = x + 1; y < verts.size(); ++y) {
        long meet = __builtin_popcountl(verts[x] & verts[y]);
        long d = 2 * (s.w - meet);
        if (d > 0 && d < delta) g.edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
      }
  }
  g.normalize();
  return g;
}

SdpProblem theta_sdp(const Graph& g, ThetaVariant variant) {
  if (g.n < 1) throw std::domain_error("theta_sdp: need n >= 1");
  SdpProblem p;
  if (variant == ThetaVariant::Theta) {
    // Matrix side: max tr(J B), tr(B) = 1, B_ij = 0 on edges, B psd.
    // LMI side (solved simultaneously): min t with t I + sum_e x_e E_e - J psd.
    p.blocks.push_back({g.n, false});
    p.num_constraints = 1 + static_cast<int>(g.edges.size());
    p.c.assign(p.num_constraints, 0.0);
    p.c[0] = 1.0;
    p.maximize = false;
    for (int i = 0; i < g.n; ++i)
      for (int j = i; j < g.n; ++j) p.entries.push_back({0, 0, i, j, 1.0});  // F_0 = J
    for (int i = 0; i < g.n; ++i) p.entries.push_back({1, 0, i, i, 1.0});    // trace
    for (size_t e = 0; e < g.edges.size(); ++e)
      p.entries.push_back({static_cast<int>(e) + 2, 0, g.edges[e].first, g.edges[e].second, 1.0});
    return p;
  }
  // theta': scalar variables t and the entries of B; constraints
  //   B psd,  t - 1 - B_ii >= 0,  -1 - B_ij >= 0 for non-edges.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < g.n; ++i)
    for (int j = i; j < g.n; ++j) pairs.emplace_back(i, j);
  std::vector<std::pair<int, int>> nonedges;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!g.has_edge(i, j)) nonedges.emplace_back(i, j);

  p.maximize = false;
  p.num_constraints = 1 + static_cast<int>(pairs.size());
  p.c.assign(p.num_constraints, 0.0);
  p.c[0] = 1.0;  // minimize t
  p.blocks.push_back({g.n, false});
  int diag = g.n + static_cast<int>(nonedges.size());
  p.blocks.push_back({diag, true});

  auto var_of = [&](int i, int j) {
    // 1-based constraint index of b_ij, after t.
    int idx = 0;
    for (const auto& pr : pairs) {
      if (pr.first == i && pr.second == j) return idx + 2;
      ++idx;
    }
    throw std::logic_error("theta_sdp: pair lookup");
  };

  for (size_t t = 0; t < pairs.size(); ++t)
    p.entries.push_back({static_cast<int>(t) + 2, 0, pairs[t].first, pairs[t].second, 1.0});
  // rows t - 1 - b_ii >= 0
  for (int i = 0; i < g.n; ++i) {
    p.entries.push_back({1, 1, i, i, 1.0});
    p.entries.push_back({var_of(i, i), 1, i, i, -1.0});
    p.entries.push_back({0, 1, i, i, 1.0});  // F_0 entry: +1 moves to -1 constant
  }
  // rows -1 - b_ij >= 0 on non-edges
  for (size_t t = 0; t < nonedges.size(); ++t) {
    int r = g.n + static_cast<int>(t);
    p.entries.push_back({var_of(nonedges[t].first, nonedges[t].second), 1, r, r, -1.0});
    p.entries.push_back({0, 1, r, r, 1.0});
  }
  return p;
}

ThetaResult theta_solve(const Graph& g, ThetaVariant variant, double tol) {
  ThetaResult r;
  if (g.n == 0) return r;
  // Edgeless and complete graphs short-circuit through the same SDP path;
  // no special casing needed at these sizes.
  SdpProblem p = theta_sdp(g, variant);
  r.solution = ipm_solve(p, tol, 200);
  r.status = r.solution.status;
  r.value = 0.5 * (r.solution.primal_obj + r.solution.dual_obj);
  return r;
}

double theta_cycle_closed_form(long q) {
  if (q < 3) throw std::domain_error("theta_cycle_closed_form: need q >= 3");
  if (q % 2 == 0) return static_cast<double>(q) / 2.0;
  double c = std::cos(M_PI / static_cast<double>(q));
  return static_cast<double>(q) * c / (1.0 + c);
}

std::pair<LpProblem, double> theta_circulant_lp(long q, const std::vector<long>& connections) {
  if (q < 3) throw std::domain_error("theta_circulant_lp: need q >= 3");
  long m = q / 2;
  LpProblem p;
  p.maximize = true;
  p.objective.assign(m + 1, Rational(0));
  p.objective[0] = Rational(q);
  for (long k = 0; k <= m; ++k) p.var_names.push_back("f_" + std::to_string(k));
  LpProblem::Row sum_row;
  sum_row.rel = Relation::Eq;
  sum_row.rhs = Rational(1);
  sum_row.coeffs.assign(m + 1, Rational(1));
  p.rows.push_back(std::move(sum_row));
  for (long s : connections) {
    LpProblem::Row row;
    row.rel = Relation::Eq;
    row.rhs = Rational(0);
    for (long k = 0; k <= m; ++k)
      row.coeffs.push_back(
          Rational::from_double(std::cos(2.0 * M_PI * static_cast<double>(k * s) / q)));
    p.rows.push_back(std::move(row));
  }
  auto sol = simplex_solve(p);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("theta_circulant_lp: LP not optimal");
  return {std::move(p), sol.value.to_double()};
}

std::pair<LpProblem, double> theta_cycle_symmetrized_lp(long q) {
  auto lp = theta_circulant_lp(q, {1});
  // Structural optimum on support {0, floor(q/2)}: f_m = 1/(1-c), f_0 = -c/(1-c).
  long m = q / 2;
  double c = std::cos(2.0 * M_PI * static_cast<double>(m) / static_cast<double>(q));
  double structural = -static_cast<double>(q) * c / (1.0 - c);
  if (std::fabs(structural - lp.second) > 1e-9)
    throw std::logic_error("theta_cycle_symmetrized_lp: simplex disagrees with support solve");
  return {std::move(lp.first), structural};
}

namespace {

class BitSet {
 public:
  explicit BitSet(int n = 0) : n_(n), w_((n + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }
  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }
  BitSet& operator&=(const BitSet& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  BitSet& and_not(const BitSet& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  bool disjoint_with(const BitSet& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return false;
    return true;
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  bool subset_of(const BitSet& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  template <typename F>
  void for_each(F f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k];
      while (x) {
        f(static_cast<int>(k * 64 + __builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

 private:
  int n_;
  std::vector<uint64_t> w_;
};

// Russian-doll search for a maximum independent set: process suffixes
// S_i = {v_i, ..., v_{n-1}} in increasing size, remembering c[i] = alpha(S_i)
// as a pruning bound, and stop a level as soon as one improving set appears.
struct MisSearch {
  int n = 0;
  std::vector<BitSet> nonadj;  // non-neighbours, self excluded
  std::vector<int> c;
  int best = 0;
  bool found = false;
  long nodes = 0;
  bool timed_out = false;
  std::chrono::steady_clock::time_point deadline;

  // Greedy clique cover of P with per-candidate pruning (the clique-cover
  // class number bounds how many independent vertices the prefix of P up to
  // that candidate can still contribute), combined with the suffix bounds
  // c[] of the doll loop. Candidates are branched highest class first.
  struct Scratch {
    std::vector<BitSet> cliques;
    std::vector<int> verts, klass;
  };

  void expand(BitSet P, int size) {
    if ((++nodes & 2047) == 0 && std::chrono::steady_clock::now() > deadline) timed_out = true;
    if (timed_out) return;
    if (size + P.count() <= best) return;
    int vmin = P.first();
    if (size + c[vmin] <= best) return;  // P lies in the suffix from vmin

    thread_local std::vector<Scratch> pool;
    thread_local size_t depth = 0;
    if (pool.size() <= depth) pool.resize(depth + 1);
    Scratch& sc = pool[depth];
    sc.cliques.clear();
    sc.verts.clear();
    sc.klass.clear();
    int classes = 0;
    const int kfree = best - size;  // classes 1..kfree never get branched
    thread_local std::vector<int> pos_of;
    pos_of.assign(n, -1);
    P.for_each([&](int v) {
      int t = 0;
      for (; t < classes; ++t)
        if (sc.cliques[t].disjoint_with(nonadj[v])) break;
      if (t >= kfree && kfree > 0) {
        // Re-NUMBER: move a single blocker w from a low class c1 to another
        // low class c2 so that v fits into c1.
        for (int c1 = 0; c1 < kfree && c1 < classes; ++c1) {
          BitSet block = sc.cliques[c1];
          block &= nonadj[v];
          if (block.count() != 1) continue;
          int w = block.first();
          for (int c2 = c1 + 1; c2 < kfree && c2 < classes; ++c2) {
            if (!sc.cliques[c2].disjoint_with(nonadj[w])) continue;
            sc.cliques[c1].reset(w);
            sc.cliques[c1].set(v);
            sc.cliques[c2].set(w);
            sc.klass[pos_of[w]] = c2 + 1;
            pos_of[v] = static_cast<int>(sc.verts.size());
            sc.verts.push_back(v);
            sc.klass.push_back(c1 + 1);
            return;
          }
        }
      }
      if (t == classes) {
        if (classes == static_cast<int>(sc.cliques.size()))
          sc.cliques.emplace_back(BitSet(n));
        else
          sc.cliques[classes].clear();
        ++classes;
      }
      sc.cliques[t].set(v);
      pos_of[v] = static_cast<int>(sc.verts.size());
      sc.verts.push_back(v);
      sc.klass.push_back(t + 1);
    });
    // stable sort by class; process from the back (highest class first)
    thread_local std::vector<int> order_idx;
    order_idx.clear();
    for (size_t t = 0; t < sc.verts.size(); ++t) order_idx.push_back(static_cast<int>(t));
    std::stable_sort(order_idx.begin(), order_idx.end(),
                     [&](int a, int b) { return sc.klass[a] < sc.klass[b]; });
    thread_local std::vector<std::pair<int, int>> cand;  // (v, class)
    cand.clear();
    for (int t : order_idx) cand.emplace_back(sc.verts[t], sc.klass[t]);

    for (int idx = static_cast<int>(cand.size()) - 1; idx >= 0; --idx) {
      auto [v, cls] = cand[idx];
      if (size + cls <= best) return;  // everything left has class <= cls
      P.reset(v);
      BitSet next = P;
      next &= nonadj[v];
      if (next.empty()) {
        if (size + 1 > best) {
          best = size + 1;
          found = true;
        }
      } else {
        ++depth;
        expand(next, size + 1);
        --depth;
      }
      if (found || timed_out) return;
    }
  }

  void run() {
    c.assign(n + 1, 0);
    for (int i = n - 1; i >= 0 && !timed_out; --i) {
      found = false;
      BitSet P(n);
      for (int t = i + 1; t < n; ++t) P.set(t);
      P &= nonadj[i];
      if (best == 0) best = 0;
      if (1 > best) {
        best = 1;  // the singleton {v_i}
      }
      if (!P.empty()) expand(P, 1);
      c[i] = best;
    }
  }
};

}  // namespace

AlphaResult alpha_exhaustive(const Graph& g, double time_cap_seconds) {
  AlphaResult res;
  if (g.n == 0) {
    res.exact = true;
    return res;
  }
  // Vertex order: iteratively extract the vertex of maximum remaining degree
  // (complement-degeneracy order, read back to front by the doll loop), ties
  // by index. On the distance-code benchmark graphs this keeps the suffix
  // bounds c[] informative; on random graphs it is as good as any.
  std::vector<std::vector<int>> adjl(g.n);
  for (const auto& e : g.edges) {
    adjl[e.first].push_back(e.second);
    adjl[e.second].push_back(e.first);
  }
  std::vector<int> order;
  {
    std::vector<int> deg(g.n);
    std::vector<bool> gone(g.n, false);
    for (int i = 0; i < g.n; ++i) deg[i] = static_cast<int>(adjl[i].size());
    for (int round = 0; round < g.n; ++round) {
      int pick = -1;
      for (int i = 0; i < g.n; ++i)
        if (!gone[i] && (pick < 0 || deg[i] > deg[pick])) pick = i;
      order.push_back(pick);
      gone[pick] = true;
      for (int w : adjl[pick])
        if (!gone[w]) --deg[w];
    }
  }
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;

  MisSearch s;
  s.n = g.n;
  s.nonadj.assign(g.n, BitSet(g.n));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j) s.nonadj[i].set(j);
  for (const auto& e : g.edges) {
    s.nonadj[pos[e.first]].reset(pos[e.second]);
    s.nonadj[pos[e.second]].reset(pos[e.first]);
  }
  // Seed the incumbent with multi-start greedy plus one-swap improvements;
  // the exact search then mostly refutes rather than discovers.
  {
    std::mt19937 rng(12345);
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    int starts = std::min(2000, 50 + 40 * g.n);
    for (int rep = 0; rep < starts; ++rep) {
      std::shuffle(perm.begin(), perm.end(), rng);
      BitSet avail(g.n);
      for (int i = 0; i < g.n; ++i) avail.set(i);
      std::vector<int> sol;
      for (int v : perm)
        if (avail.test(v)) {
          sol.push_back(v);
          avail.reset(v);
          avail &= s.nonadj[v];
        }
      // one-swap: drop one vertex, add two, until stuck
      bool improved = true;
      while (improved) {
        improved = false;
        for (size_t drop = 0; drop < sol.size() && !improved; ++drop) {
          BitSet free(g.n);
          for (int i = 0; i < g.n; ++i) free.set(i);
          for (size_t t = 0; t < sol.size(); ++t) {
            if (t == drop) continue;
            free.reset(sol[t]);
            free &= s.nonadj[sol[t]];
          }
          free.reset(sol[drop]);
          int add1 = -1, add2 = -1;
          free.for_each([&](int v) {
            if (add2 >= 0) return;
            if (add1 < 0) {
              add1 = v;
            } else if (s.nonadj[add1].test(v)) {
              add2 = v;
            }
          });
          if (add1 >= 0 && add2 >= 0) {
            sol.erase(sol.begin() + drop);
            sol.push_back(add1);
            sol.push_back(add2);
            improved = true;
          }
        }
      }
      s.best = std::max(s.best, static_cast<int>(sol.size()));
    }
  }
  s.deadline = std::chrono::steady_clock::now() +
               std::chrono::microseconds(static_cast<long>(time_cap_seconds * 1e6));
  s.run();
  res.value = s.best;
  res.exact = !s.timed_out;
  res.nodes = s.nodes;
  return res;
}

}  // namespace codebounds
