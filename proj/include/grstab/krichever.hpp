#pragma once

#include "grstab/grassmann.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <vector>

namespace grstab {

/// Algebraic shadow of a quintet: generators of the affine coordinate ring
/// A_C inside k((z)) and generators of the section module W over A_C.
template <class K>
struct CurveData {
  std::vector<Laurent<K>> ring_gens;    // exact z-Laurent polynomials
  std::vector<VVec<K>> module_gens;     // exact entries
  WindowFrame frame;
};

template <class K>
void validate(const CurveData<K>& d) {
  if (d.module_gens.empty()) throw std::invalid_argument("no module generators");
  for (auto& g : d.ring_gens) {
    if (!g.exact) throw std::invalid_argument("ring generators must be exact");
    auto v = g.valuation();
    if (v && *v > 0) throw std::invalid_argument("ring generator with positive valuation");
    if (v && *v == 0 && g.c.size() > 1 && g.c.rbegin()->first > 0)
      throw std::invalid_argument("ring generator meets k[[z]] beyond constants");
  }
  for (auto& m : d.module_gens)
    if (!m.a.exact || !m.b.exact) throw std::invalid_argument("module generators must be exact");
}

struct KricheverLimits {
  int max_extra_depth = 16;  // extra z-depth for the closure helper window
  int max_frame_grow = 10;   // how far the frame may auto-enlarge
};

namespace detail {

/// Span closure of the module generators under the ring generators inside
/// the helper window [helper_lo, hi): products are exact Laurent vectors,
/// only top-truncated (a quotient). Nothing is ever truncated from below;
/// vectors whose valuation drops out of the helper window are discarded
/// whole, which under-approximates the span monotonically in the depth.
template <class K>
EchelonSpace<K> closure_span(const CurveData<K>& d, int helper_lo, int hi) {
  std::vector<Vec<K>> ring;  // ring generators as t-operators f(t^2)
  for (auto& g : d.ring_gens) {
    Vec<K> r;
    for (auto& [e, k] : g.c) r.set(2 * e, k);
    ring.push_back(r);
  }
  auto mul_ring = [&](const Vec<K>& f, const Vec<K>& v) {
    Vec<K> out;
    for (auto& [d1, k1] : f.c)
      for (auto& [d2, k2] : v.c) {
        long long e = (long long)d1 + d2;
        if (e >= hi) continue;
        K t = k1 * k2;
        if (t.is_zero()) continue;
        auto it = out.c.find((int)e);
        if (it == out.c.end())
          out.c.emplace((int)e, t);
        else {
          it->second = it->second + t;
          if (it->second.is_zero()) out.c.erase(it);
        }
      }
    return out;
  };
  EchelonSpace<K> span(helper_lo, hi);
  std::deque<Vec<K>> queue;
  for (auto& m : d.module_gens) {
    Vec<K> v = from_laurent(interleave(m));
    v = drop_above(std::move(v), hi);
    if (!v.is_zero() && v.c.begin()->first >= helper_lo && span.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vec<K> v = queue.front();
    queue.pop_front();
    for (auto& f : ring) {
      Vec<K> w = mul_ring(f, v);
      if (w.is_zero() || w.c.begin()->first < helper_lo) continue;
      if (span.insert(w)) queue.push_back(w);
    }
  }
  return span;
}

}  // namespace detail

/// The Krichever map: the windowed image of the A_C-span of the module
/// generators. The helper depth grows until the window body stabilizes for
/// two consecutive rounds, and the frame auto-enlarges until the guard
/// bands certify.
template <class K>
GrassPoint<K> krichever_map(const CurveData<K>& d, const KricheverLimits& lim = {}) {
  validate(d);
  for (int grow = 0;; ++grow) {
    WindowFrame f(d.frame.M + grow, d.frame.N + grow, d.frame.guard);
    EchelonSpace<K> body(f.lo(), f.hi());
    bool stable = false;
    for (int pad = 0; pad <= lim.max_extra_depth; pad += 2) {
      auto span = detail::closure_span(d, f.lo() - 2 * pad, f.hi());
      auto cand = sub_with_support<K>(span, [&](int e) { return e >= f.lo(); });
      auto next = re_ambient(cand, f.lo(), f.hi());
      if (pad > 0 && next == body) {
        stable = true;
        break;
      }
      body = next;
    }
    if (stable && top_certified(f, body) && bottom_certified(f, body)) {
      GrassPoint<K> w;
      w.frame = f;
      w.body = body;
      w.certified = true;
      w.mu = window_index(f, body);
      return w;
    }
    if (grow >= lim.max_frame_grow)
      throw saturation_error("closure did not certify within the configured frame");
  }
}

/// Convenience builder for the split bundles O(d1) (+) O(d2) on P^1: ring
/// k[z^{-1}], module generated by (z^{d1}, 0) and (0, z^{d2}).
template <class K>
CurveData<K> p1_split_bundle(int d1, int d2, const WindowFrame& f) {
  CurveData<K> d;
  d.ring_gens = {lpoly<K>('z', {{-1, K(1)}})};
  d.module_gens = {vvec(lpoly<K>('z', {{d1, K(1)}}), lzero<K>('z')),
                   vvec(lzero<K>('z'), lpoly<K>('z', {{d2, K(1)}}))};
  d.frame = f;
  return d;
}

/// h^0 = dim W cap V0 and h^1 = dim V/(W + V0) read off the window.
/// Exact for certified points; on a heuristic point these are window-local
/// values (and `fredholm` reports false).
struct Cohomology {
  int h0 = 0, h1 = 0;
  bool fredholm = true;
};

template <class K>
Cohomology cohomology(const GrassPoint<K>& w) {
  Cohomology c;
  c.h0 = sub_with_support<K>(w.body, [](int e) { return e >= 0; }).dim();
  EchelonSpace<K> s = w.body;
  for (int e = 0; e < w.frame.hi(); ++e) s.insert(unit_vec<K>(e));
  c.h1 = (w.frame.hi() - w.frame.lo()) - s.dim();
  c.fredholm = w.certified;
  return c;
}

/// Basis of {f in k((z)) supported on [vlo, vhi) : f W within W at window
/// scale}, together with the attained valuations. Always contains the
/// constants.
template <class K>
struct StabilizerRing {
  std::vector<Laurent<K>> basis;
  std::set<int> valuations;
  int vlo = 0, vhi = 0;
};

template <class K>
StabilizerRing<K> stabilizer_ring(const GrassPoint<K>& w, int vlo, int vhi) {
  if (!w.certified) throw certification_error("stabilizer ring requires a certified point");
  if (vlo < -(w.frame.M - w.frame.guard) || vhi > w.frame.N - w.frame.guard)
    throw window_error("valuation range exceeds the guard-interior");
  if (vlo >= vhi) throw window_error("empty valuation range");
  const auto& rows = w.body.rows();
  // unknowns c_v; constraints: residual of sum_v c_v z^v r vanishes per row
  std::vector<Vec<K>> residuals;  // one pseudo-row per unknown, stacked residual blocks
  int nvars = vhi - vlo;
  int block = w.frame.hi() - w.frame.lo();
  residuals.resize(nvars);
  for (int vi = 0; vi < nvars; ++vi) {
    int v = vlo + vi;
    Vec<K> stacked;
    for (size_t ri = 0; ri < rows.size(); ++ri) {
      Vec<K> s = shifted(rows[ri], 2 * v);
      s = drop_above(std::move(s), w.frame.hi());   // quotient by z^N V0
      s = drop_below(std::move(s), w.frame.lo());   // absorbed by the deep tail
      Vec<K> res = w.body.reduce(std::move(s));     // linear in s
      for (auto& [e, k] : res.c)
        stacked.set((int)(e + (long long)ri * block), k);  // disjoint blocks
    }
    residuals[vi] = std::move(stacked);
  }
  std::vector<int> constraints;
  {
    std::set<int> support;
    for (auto& r : residuals)
      for (auto& [e, k] : r.c) support.insert(e);
    constraints.assign(support.begin(), support.end());
  }
  StabilizerRing<K> out;
  out.vlo = vlo;
  out.vhi = vhi;
  // triangularize by valuation: mirror exponents so the pivot convention
  // (highest exponent) lands on the lowest original exponent
  EchelonSpace<K> canon(-vhi + 1, -vlo + 1);
  for (auto& x : kernel_combos(residuals, constraints)) {
    Vec<K> f;
    for (int vi = 0; vi < nvars; ++vi)
      if (!x[vi].is_zero()) f.set(-(vlo + vi), x[vi]);
    canon.insert(f);
  }
  for (auto& r : canon.rows()) {
    Laurent<K> f = lzero<K>('z', vlo, vhi, true);
    for (auto& [e, k] : r.c) f.c.emplace(-e, k);
    out.basis.push_back(f);
    out.valuations.insert(*f.valuation());
  }
  return out;
}

/// Rank-one (Krichever image) test: some pair of attained valuations has
/// coprime difference pattern, i.e. the gcd of all pairwise differences
/// is 1.
template <class K>
bool rank_one_test(const StabilizerRing<K>& a) {
  std::vector<int> vals(a.valuations.begin(), a.valuations.end());
  int g = 0;
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = i + 1; j < vals.size(); ++j)
      g = std::gcd(g, vals[j] - vals[i]);
  return g == 1;
}

}  // namespace grstab
