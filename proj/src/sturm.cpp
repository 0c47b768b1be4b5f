// SPDX-License-Identifier: Apache-2.0
#include "codebounds/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace codebounds {

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p;
  Poly g = Poly::gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return Poly::divmod(p, g).first;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() > 0) {
    Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

long sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  long v = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = q(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// A rational in (lo, hi) that is not a root of s.
Rational non_root_between(const Poly& s, const Rational& lo, const Rational& hi) {
  Rational m = (lo + hi) / Rational(2);
  while (s(m).is_zero()) m = (lo + m) / Rational(2);
  return m;
}

struct Isolator {
  Rational lo, hi;  // one root of s in (lo, hi]; endpoints are non-roots
};

// Halve the interval, keeping the half with the root.
void refine(const std::vector<Poly>& chain, const Poly& s, Isolator& iv) {
  Rational m = non_root_between(s, iv.lo, iv.hi);
  if (sign_variations(chain, iv.lo) - sign_variations(chain, m) == 1)
    iv.hi = m;
  else
    iv.lo = m;
}

std::vector<Isolator> isolate(const std::vector<Poly>& chain, const Poly& s, const Rational& a,
                              const Rational& b) {
  std::vector<Isolator> out;
  struct Seg { Rational lo, hi; long cnt; };
  long total = sign_variations(chain, a) - sign_variations(chain, b);
  std::vector<Seg> work{{a, b, total}};
  while (!work.empty()) {
    Seg seg = work.back();
    work.pop_back();
    if (seg.cnt <= 0) continue;
    if (seg.cnt == 1) {
      out.push_back({seg.lo, seg.hi});
      continue;
    }
    Rational mid = non_root_between(s, seg.lo, seg.hi);
    long left = sign_variations(chain, seg.lo) - sign_variations(chain, mid);
    work.push_back({mid, seg.hi, seg.cnt - left});
    work.push_back({seg.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const Isolator& x, const Isolator& y) {
    return x.lo < y.lo;
  });
  return out;
}

}  // namespace

long count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  if (chain.empty()) return 0;
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const Poly& p, Rational a, Rational b) {
  Poly s = squarefree_part(p);
  if (s.degree() <= 0) return {};
  if (s(a).is_zero() || s(b).is_zero())
    throw std::domain_error("isolate_roots: endpoints must not be roots");
  auto chain = sturm_chain(s);
  std::vector<std::pair<Rational, Rational>> out;
  for (auto& iv : isolate(chain, s, a, b)) out.emplace_back(iv.lo, iv.hi);
  return out;
}

SignVerdict poly_nonpositive_on(const Poly& p, const Rational& a, const Rational& b) {
  if (a > b) throw std::domain_error("poly_nonpositive_on: empty interval");
  if (p.is_zero()) return {true, Rational(0)};
  if (p(a).sign() > 0) return {false, a};
  if (p(b).sign() > 0) return {false, b};
  if (a == b) return {true, Rational(0)};

  // Interior roots of p = roots of the squarefree part with endpoint roots
  // divided out. Between consecutive roots the sign of p is constant, so the
  // test reduces to finitely many exact evaluations once each root is boxed
  // strictly away from its neighbours and from the endpoints.
  Poly s = squarefree_part(p);
  for (const Rational& e : {a, b})
    while (!s.is_zero() && s(e).is_zero())
      s = Poly::divmod(s, Poly(std::vector<Rational>{-e, Rational(1)})).first;

  auto sample_fail = [&](const Rational& x) { return p(x).sign() > 0; };

  if (s.degree() <= 0) {  // no interior roots: one sign on (a,b)
    Rational m = (a + b) / Rational(2);
    if (sample_fail(m)) return {false, m};
    return {true, Rational(0)};
  }

  auto chain = sturm_chain(s);
  auto ivs = isolate(chain, s, a, b);
  if (ivs.empty()) {
    Rational m = non_root_between(s, a, b);
    if (sample_fail(m)) return {false, m};
    return {true, Rational(0)};
  }

  // Refine until intervals are strictly inside (a,b) and pairwise separated;
  // then every maximal sign region of p contains some interval endpoint.
  bool again = true;
  while (again) {
    again = false;
    if (!(ivs.front().lo > a)) { refine(chain, s, ivs.front()); again = true; }
    if (!(ivs.back().hi < b)) { refine(chain, s, ivs.back()); again = true; }
    for (size_t i = 0; i + 1 < ivs.size(); ++i)
      if (!(ivs[i].hi < ivs[i + 1].lo)) {
        refine(chain, s, ivs[i]);
        refine(chain, s, ivs[i + 1]);
        again = true;
      }
  }
  for (const auto& iv : ivs) {
    if (sample_fail(iv.lo)) return {false, iv.lo};
    if (sample_fail(iv.hi)) return {false, iv.hi};
  }
  return {true, Rational(0)};
}

Rational poly_max_upper_bound(const Poly& p, const Rational& a, const Rational& b,
                              const Rational& slack) {
  if (slack.sign() <= 0) throw std::domain_error("poly_max_upper_bound: slack must be > 0");
  Rational box = Rational(1);
  if (a.abs() > box) box = a.abs();
  if (b.abs() > box) box = b.abs();
  Rational hi(0), pw(1);
  for (int i = 0; i <= p.degree(); ++i) {
    hi += p.coeff(i).abs() * pw;
    pw *= box;
  }
  Rational lo = p(a);
  if (p(b) > lo) lo = p(b);
  if (poly_nonpositive_on(p - Poly::constant(lo), a, b).ok) return lo;
  while (hi - lo > slack) {
    Rational mid = (lo + hi) / Rational(2);
    if (poly_nonpositive_on(p - Poly::constant(mid), a, b).ok)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace codebounds
