#pragma once

#include "grstab/field.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <string>

namespace grstab {

/// A Laurent series known on the exponent window [lo, hi). Coefficients
/// below lo are zero; coefficients at exponents >= hi are unknown unless
/// `exact` is set, in which case the series is a Laurent polynomial that
/// vanishes beyond its stored support. Zero coefficients are never stored.
template <class K>
struct Laurent {
  char var = 'z';  // 'z' (ambient) or 't' (interleaved)
  int lo = 0, hi = 0;
  bool exact = true;
  std::map<int, K> c;

  bool support_empty() const { return c.empty(); }
  std::optional<int> valuation() const {
    if (c.empty()) return std::nullopt;
    return c.begin()->first;
  }
  K coeff(int e) const {
    auto it = c.find(e);
    return it == c.end() ? K(0) : it->second;
  }
  /// Equality compares variable tag and support only (canonical form).
  bool operator==(const Laurent& o) const { return var == o.var && c == o.c; }
};

namespace detail {
constexpr long long kInf = std::numeric_limits<int>::max();
inline long long eff_hi(int hi, bool exact) { return exact ? kInf : hi; }
inline int clamp_exp(long long e) {
  return (int)std::min<long long>(e, kInf);
}
}  // namespace detail

template <class K>
Laurent<K> lzero(char var, int lo = 0, int hi = 0, bool exact = true) {
  Laurent<K> f;
  f.var = var;
  f.lo = lo;
  f.hi = hi;
  f.exact = exact;
  return f;
}

template <class K>
Laurent<K> lmono(char var, int e, K coef) {
  Laurent<K> f = lzero<K>(var, e, e + 1);
  if (!coef.is_zero()) f.c.emplace(e, coef);
  return f;
}

template <class K>
Laurent<K> lpoly(char var, std::initializer_list<std::pair<int, K>> terms) {
  Laurent<K> f = lzero<K>(var);
  bool first = true;
  for (auto& [e, k] : terms) {
    if (k.is_zero()) continue;
    if (first) {
      f.lo = e;
      f.hi = e + 1;
      first = false;
    }
    f.lo = std::min(f.lo, e);
    f.hi = std::max(f.hi, e + 1);
    f.c[e] = f.c.count(e) ? f.c[e] + k : k;
  }
  for (auto it = f.c.begin(); it != f.c.end();)
    it = it->second.is_zero() ? f.c.erase(it) : std::next(it);
  return f;
}

/// Marks coefficients at exponents >= h unknown and drops them.
template <class K>
Laurent<K> truncate_above(Laurent<K> f, int h) {
  f.exact = false;
  f.hi = std::min(f.hi, h);
  f.c.erase(f.c.lower_bound(h), f.c.end());
  f.lo = std::min(f.lo, f.hi);
  return f;
}

template <class K>
Laurent<K> shift(Laurent<K> f, int d) {
  Laurent<K> g = lzero<K>(f.var, f.lo + d, f.hi + d, f.exact);
  for (auto& [e, k] : f.c) g.c.emplace(e + d, k);
  return g;
}

template <class K>
Laurent<K> scale(Laurent<K> f, const K& k) {
  if (k.is_zero()) {
    f.c.clear();
    return f;
  }
  for (auto& [e, v] : f.c) v = v * k;
  return f;
}

template <class K>
Laurent<K> operator+(const Laurent<K>& f, const Laurent<K>& g) {
  if (f.var != g.var) throw window_error("variable tag mismatch");
  long long h = std::min(detail::eff_hi(f.hi, f.exact), detail::eff_hi(g.hi, g.exact));
  Laurent<K> r = lzero<K>(f.var, std::min(f.lo, g.lo), 0, f.exact && g.exact);
  r.hi = r.exact ? std::max(f.hi, g.hi) : (int)h;
  r.lo = std::min(r.lo, r.hi);
  r.c = f.c;
  for (auto& [e, k] : g.c) {
    auto [it, fresh] = r.c.emplace(e, k);
    if (!fresh) it->second = it->second + k;
  }
  for (auto it = r.c.begin(); it != r.c.end();) {
    if (it->first >= h || it->second.is_zero())
      it = r.c.erase(it);
    else
      ++it;
  }
  return r;
}

template <class K>
Laurent<K> operator-(const Laurent<K>& f, const Laurent<K>& g) {
  return f + scale(g, K(-1));
}

/// Cauchy product with pessimistic precision propagation: the result is
/// known strictly below min(f.lo + g.hi, g.lo + f.hi) when either factor is
/// inexact, and is exact when both factors are.
template <class K>
Laurent<K> operator*(const Laurent<K>& f, const Laurent<K>& g) {
  if (f.var != g.var) throw window_error("variable tag mismatch");
  bool exact = f.exact && g.exact;
  long long h = exact ? detail::kInf
                      : std::min((long long)f.lo + detail::eff_hi(g.hi, g.exact),
                                 (long long)g.lo + detail::eff_hi(f.hi, f.exact));
  Laurent<K> r = lzero<K>(f.var, f.lo + g.lo, 0, exact);
  r.hi = exact ? f.hi + g.hi : detail::clamp_exp(h);
  r.lo = std::min(r.lo, r.hi);
  for (auto& [e1, k1] : f.c)
    for (auto& [e2, k2] : g.c) {
      long long e = (long long)e1 + e2;
      if (e >= h) continue;
      K t = k1 * k2;
      if (t.is_zero()) continue;
      auto [it, fresh] = r.c.emplace((int)e, t);
      if (!fresh) it->second = it->second + t;
    }
  for (auto it = r.c.begin(); it != r.c.end();)
    it = it->second.is_zero() ? r.c.erase(it) : std::next(it);
  return r;
}

/// Inverse of a unit-valuation-v series, correct on exponents < prec.
template <class K>
Laurent<K> invert_unit(const Laurent<K>& f, int prec) {
  auto v = f.valuation();
  if (!v) throw std::domain_error("inverse of zero series");
  K lead = f.coeff(*v);
  Laurent<K> g = lzero<K>(f.var, -*v, prec, false);
  // g solved term by term from f*g = 1
  for (int e = -*v; e < prec; ++e) {
    K acc = (e == -*v) ? K(1) : K(0);
    for (auto& [d, k] : f.c) {
      if (d == *v) continue;
      int ge = e + *v - d;  // earlier coefficient feeding exponent e + v
      if (ge >= -*v && ge < e) acc = acc - k * g.coeff(ge);
    }
    K ce = acc / lead;
    if (!ce.is_zero()) g.c.emplace(e, ce);
  }
  return g;
}

/// A vector of V = k((z)) (+) k((z)); both components share one window.
template <class K>
struct VVec {
  Laurent<K> a, b;
};

template <class K>
VVec<K> vvec(Laurent<K> a, Laurent<K> b) {
  if (a.var != 'z' || b.var != 'z') throw window_error("VVec components must be z-series");
  if (a.lo != b.lo || a.hi != b.hi) {
    if (a.exact && b.exact) {  // exact windows carry no information; align freely
      int lo = std::min(a.lo, b.lo), hi = std::max(a.hi, b.hi);
      a.lo = b.lo = lo;
      a.hi = b.hi = hi;
    } else {
      throw window_error("mismatched component windows");
    }
  }
  return {std::move(a), std::move(b)};
}

/// The identification V ~ k((t)): (z^i, 0) -> t^{2i}, (0, z^i) -> t^{2i+1}.
template <class K>
Laurent<K> interleave(const VVec<K>& v) {
  if (v.a.lo != v.b.lo || v.a.hi != v.b.hi) throw window_error("mismatched component windows");
  Laurent<K> r = lzero<K>('t', 2 * v.a.lo, 2 * v.a.hi, v.a.exact && v.b.exact);
  for (auto& [e, k] : v.a.c) r.c.emplace(2 * e, k);
  for (auto& [e, k] : v.b.c) r.c.emplace(2 * e + 1, k);
  return r;
}

template <class K>
VVec<K> deinterleave(Laurent<K> w) {
  if (w.var != 't') throw window_error("deinterleave expects a t-series");
  if (w.lo % 2 != 0 || w.hi % 2 != 0) {
    if (!w.exact) throw window_error("odd window bound");
    w.lo -= ((w.lo % 2) + 2) % 2;  // exact windows widen freely
    w.hi += ((w.hi % 2) + 2) % 2;
  }
  Laurent<K> a = lzero<K>('z', w.lo / 2, w.hi / 2, w.exact);
  Laurent<K> b = a;
  for (auto& [e, k] : w.c) {
    if (((e % 2) + 2) % 2 == 0)
      a.c.emplace(e / 2, k);  // even exponents: exact division
    else
      b.c.emplace(e >= 0 ? e / 2 : (e - 1) / 2, k);
  }
  return {std::move(a), std::move(b)};
}

template <class K>
std::string to_string(const Laurent<K>& f) {
  if (f.c.empty()) return "0";
  std::string s;
  for (auto& [e, k] : f.c) {
    if (!s.empty()) s += " + ";
    s += "(" + k.str() + ")";
    if (e != 0) s += std::string(1, f.var) + "^" + std::to_string(e);
  }
  return s;
}

}  // namespace grstab
