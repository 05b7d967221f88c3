#pragma once

#include "grstab/echelon.hpp"

#include <map>
#include <optional>
#include <vector>

namespace grstab {

/// Finite window onto V: the lattice pair z^{-M}V0 over z^N V0, with a guard
/// band certifying that window computations agree with their infinite
/// counterparts. The ambient t-window is [-2M, 2N).
struct WindowFrame {
  int M = 2;
  int N = 2;
  int guard = 1;

  WindowFrame() = default;
  WindowFrame(int m, int n, int g) : M(m), N(n), guard(g) {
    if (M < 0 || N < 0 || M + N <= 0) throw window_error("degenerate frame");
    if (g < 0 || g > std::min(M, N)) throw window_error("guard exceeds frame");
  }
  int lo() const { return -2 * M; }
  int hi() const { return 2 * N; }
  int interior_lo() const { return -2 * (M - guard); }
  int interior_hi() const { return 2 * (N - guard); }
  bool operator==(const WindowFrame&) const = default;
};

/// A windowed point of Gr^mu(V): the image of W in z^{-M}V0 / z^N V0 under
/// the t-identification, as a reduced echelon space. `certified` records
/// that the structural guard-band conditions held at construction:
///   top:    body meets the span of exponents >= 2(N-guard) trivially
///           (witnesses W cap z^{N-guard}V0 = 0 at window scale);
///   bottom: every exponent in [-2M, -2(M-guard)) is a pivot
///           (witnesses V = W + z^{-(M-guard)}V0 at window scale).
template <class K>
struct GrassPoint {
  WindowFrame frame;
  EchelonSpace<K> body;
  int mu = 0;
  bool certified = false;
};

template <class K>
bool top_certified(const WindowFrame& f, const EchelonSpace<K>& body) {
  int band = f.hi() - 2 * f.guard;
  return sub_with_support<K>(body, [&](int e) { return e >= band; }).dim() == 0;
}

template <class K>
bool bottom_certified(const WindowFrame& f, const EchelonSpace<K>& body) {
  for (int e = f.lo(); e < f.interior_lo(); ++e)
    if (!body.has_pivot(e)) return false;
  return true;
}

template <class K>
int window_index(const WindowFrame& f, const EchelonSpace<K>& body) {
  auto nonneg = [](int e) { return e >= 0; };
  int h0 = sub_with_support<K>(body, nonneg).dim();
  EchelonSpace<K> s = body;
  for (int e = 0; e < f.hi(); ++e) s.insert(unit_vec<K>(e));
  int h1 = (f.hi() - f.lo()) - s.dim();
  return h0 - h1;
}

/// Builds a point from spanning window vectors. With `require_certified`
/// the structural conditions must hold, otherwise the point is flagged
/// heuristic and window-local quantities are still available.
template <class K>
GrassPoint<K> make_point(const WindowFrame& f, const std::vector<Vec<K>>& rows,
                         bool require_certified = true) {
  GrassPoint<K> w;
  w.frame = f;
  w.body = echelonize(f.lo(), f.hi(), rows);
  w.certified = top_certified(f, w.body) && bottom_certified(f, w.body);
  if (require_certified && !w.certified)
    throw certification_error("guard-band certification failed");
  w.mu = window_index(f, w.body);
  return w;
}

/// Standard reference points, mostly for tests and CLI raw-point input.
template <class K>
GrassPoint<K> lattice_point(const WindowFrame& f, int i) {  // W = z^i V0
  std::vector<Vec<K>> rows;
  for (int e = std::max(2 * i, f.lo()); e < f.hi(); ++e) rows.push_back(unit_vec<K>(e));
  return make_point(f, rows, false);
}

/// Fredholm index from the window: dim(W cap V0) - dim(V/(W+V0)), both read
/// off the body. Exact for certified points and stable under frame
/// enlargement; on heuristic points it is a window-local value.
template <class K>
int index_of(const GrassPoint<K>& w) {
  return window_index(w.frame, w.body);
}

/// Echelon image of W cap z^i V0.
template <class K>
EchelonSpace<K> lattice_meet(const GrassPoint<K>& w, int i) {
  if (i < -w.frame.M || i > w.frame.N) throw window_error("lattice level outside frame");
  return sub_with_support<K>(w.body, [&](int e) { return e >= 2 * i; });
}

/// T_W(i) = dim (W cap z^i V0)/(W cap z^{i+1} V0) on the reported range
/// [-(M-guard), N-guard).
template <class K>
std::map<int, int> t_profile(const GrassPoint<K>& w) {
  std::map<int, int> t;
  int lo = -(w.frame.M - w.frame.guard), hi = w.frame.N - w.frame.guard;
  int prev = lattice_meet(w, lo).dim();
  for (int i = lo; i < hi; ++i) {
    int next = lattice_meet(w, i + 1).dim();
    t[i] = prev - next;
    prev = next;
  }
  return t;
}

/// A level where T_W jumps by one, with the jump line in the canonical
/// homogeneous coordinates z^i (+) 0 and 0 (+) z^i. The first nonzero
/// coordinate is normalized to 1.
template <class K>
struct ProfilePoint {
  int level = 0;
  K u, v;

  bool same_point(const ProfilePoint& o) const {
    return u == o.u && v == o.v;
  }
};

template <class K>
ProfilePoint<K> normalized_profile_point(int level, K u, K v) {
  K s = u.is_zero() ? v.inv() : u.inv();
  return ProfilePoint<K>{level, u * s, v * s};
}

/// x_W: one entry per level with T_W = 1, ordered by level.
template <class K>
std::vector<ProfilePoint<K>> config_point(const GrassPoint<K>& w) {
  std::vector<ProfilePoint<K>> xs;
  int lo = -(w.frame.M - w.frame.guard), hi = w.frame.N - w.frame.guard;
  EchelonSpace<K> prev = lattice_meet(w, lo);
  for (int i = lo; i < hi; ++i) {
    EchelonSpace<K> next = lattice_meet(w, i + 1);
    if (prev.dim() - next.dim() == 1) {
      for (auto& r : prev.rows()) {
        if (next.contains(r)) continue;
        xs.push_back(normalized_profile_point(i, r.coeff(2 * i), r.coeff(2 * i + 1)));
        break;
      }
    }
    prev = next;
  }
  return xs;
}

/// A 2x2 matrix over k[[z]] truncated at z-degree `deg`; acts on V and on
/// window bodies through the interleaved t-coordinates.
template <class K>
struct GroupElement {
  Laurent<K> a, b, c, d;  // [[a, b], [c, d]], nonnegative z-exponents
  int deg = 0;
  bool exact = true;
  Laurent<K> det;
};

template <class K>
GroupElement<K> group_element(Laurent<K> a, Laurent<K> b, Laurent<K> c, Laurent<K> d,
                              int deg, bool exact = true) {
  for (auto* f : {&a, &b, &c, &d}) {
    if (f->var != 'z') throw window_error("group entries must be z-series");
    if (!f->c.empty() && f->c.begin()->first < 0)
      throw std::invalid_argument("group entries must lie in k[[z]]");
  }
  GroupElement<K> g{std::move(a), std::move(b), std::move(c), std::move(d), deg, exact, {}};
  if (exact) {  // for polynomial matrices the degree is determined by the entries
    g.deg = 0;
    for (auto* f : {&g.a, &g.b, &g.c, &g.d})
      if (!f->c.empty()) g.deg = std::max(g.deg, f->c.rbegin()->first);
  }
  g.det = g.a * g.d - g.b * g.c;
  if (!exact) g.det = truncate_above(g.det, g.deg + 1);
  if (g.det.coeff(0).is_zero())
    throw std::invalid_argument("group element not invertible over k[[z]]");
  return g;
}

template <class K>
GroupElement<K> identity_element() {
  auto one = lpoly<K>('z', {{0, K(1)}});
  auto zero = lzero<K>('z');
  return group_element(one, zero, zero, one, 0, true);
}

template <class K>
bool is_sl(const GroupElement<K>& g) {
  return g.det.c.size() == 1 && g.det.coeff(0) == K(1);
}

template <class K>
GroupElement<K> group_mul(const GroupElement<K>& x, const GroupElement<K>& y) {
  bool exact = x.exact && y.exact;
  int deg = exact ? 0 : std::min(x.exact ? y.deg : x.deg, y.exact ? x.deg : y.deg);
  auto trunc = [&](Laurent<K> f) { return exact ? f : truncate_above(f, deg + 1); };
  return group_element(trunc(x.a * y.a + x.b * y.c), trunc(x.a * y.b + x.b * y.d),
                       trunc(x.c * y.a + x.d * y.c), trunc(x.c * y.b + x.d * y.d),
                       deg, exact);
}

/// t-symbols of the action: g(t^e) = phi_even(t) t^e for even e and
/// phi_odd(t) t^e for odd e.
template <class K>
Laurent<K> phi_even(const GroupElement<K>& g) {
  Laurent<K> s = lzero<K>('t');
  for (auto& [e, k] : g.a.c) s.c.emplace(2 * e, k);
  for (auto& [e, k] : g.c.c) s.c.emplace(2 * e + 1, k);
  s.lo = 0;
  s.hi = 2 * (g.deg + 1);
  s.exact = g.exact;
  return s;
}

template <class K>
Laurent<K> phi_odd(const GroupElement<K>& g) {
  Laurent<K> s = lzero<K>('t');
  for (auto& [e, k] : g.d.c) s.c.emplace(2 * e, k);
  for (auto& [e, k] : g.b.c) s.c.emplace(2 * e - 1, k);
  s.lo = -1;
  s.hi = 2 * (g.deg + 1);
  s.exact = g.exact;
  return s;
}

/// Applies the t-matrix of g to a window vector, dropping coordinates at
/// exponents >= hi_cap. When the vector is supported in even-aligned
/// windows, the phi_odd shift by -1 never leaves the window at the bottom.
template <class K>
Vec<K> apply_group(const Laurent<K>& even_sym, const Laurent<K>& odd_sym, const Vec<K>& v,
                   int hi_cap) {
  Vec<K> out;
  for (auto& [e, k] : v.c) {
    const Laurent<K>& sym = (((e % 2) + 2) % 2 == 0) ? even_sym : odd_sym;
    for (auto& [d, s] : sym.c) {
      long long ee = (long long)e + d;
      if (ee >= hi_cap) continue;
      K t = k * s;
      if (t.is_zero()) continue;
      auto it = out.c.find((int)ee);
      if (it == out.c.end())
        out.c.emplace((int)ee, t);
      else {
        it->second = it->second + t;
        if (it->second.is_zero()) out.c.erase(it);
      }
    }
  }
  return out;
}

/// The action of GL(2, k[[z]]) on windowed points. Because g preserves
/// every lattice z^i V0, the image body is exactly the span of the
/// transformed rows: gW cap z^{-M}V0 = g(W cap z^{-M}V0), read modulo
/// z^N V0. For inexact g, entries beyond the truncation degree corrupt
/// exponents >= 2(deg+1) - 2M; the frame top shrinks by that slack and
/// certification is re-checked, so precision loss is never silent.
template <class K>
GrassPoint<K> act(const GroupElement<K>& g, const GrassPoint<K>& w) {
  if (!w.certified) throw certification_error("act requires a certified point");
  const WindowFrame& f = w.frame;
  int slack = g.exact ? 0 : std::max(0, f.M + f.N - (g.deg + 1));
  if (f.guard > std::min(f.M, f.N - slack))
    throw precision_error("guard exhausted by truncated group element");
  auto es = phi_even(g), os = phi_odd(g);
  int hi = f.hi() - 2 * slack;
  std::vector<Vec<K>> rows;
  for (auto& r : w.body.rows()) rows.push_back(apply_group(es, os, r, hi));
  GrassPoint<K> out = make_point(WindowFrame(f.M, f.N - slack, f.guard), rows, false);
  if (!out.certified) throw precision_error("action left the certifiable window");
  return out;
}

}  // namespace grstab
