#pragma once

#include "grstab/laurent.hpp"

#include <functional>
#include <map>
#include <vector>

namespace grstab {

/// Sparse window vector in the t-coordinates: exponent -> nonzero coefficient.
template <class K>
struct Vec {
  std::map<int, K> c;

  bool is_zero() const { return c.empty(); }
  int top() const { return c.rbegin()->first; }  // requires nonzero
  K coeff(int e) const {
    auto it = c.find(e);
    return it == c.end() ? K(0) : it->second;
  }
  void set(int e, K k) {
    if (k.is_zero())
      c.erase(e);
    else
      c[e] = std::move(k);
  }
  bool operator==(const Vec&) const = default;
};

template <class K>
Vec<K> unit_vec(int e) {
  Vec<K> v;
  v.c.emplace(e, K(1));
  return v;
}

template <class K>
Vec<K> from_laurent(const Laurent<K>& f) {
  Vec<K> v;
  v.c = f.c;
  return v;
}

template <class K>
Laurent<K> to_laurent(const Vec<K>& v, char var, int lo, int hi, bool exact = true) {
  Laurent<K> f = lzero<K>(var, lo, hi, exact);
  f.c = v.c;
  return f;
}

template <class K>
void axpy(Vec<K>& v, const K& k, const Vec<K>& w) {
  if (k.is_zero()) return;
  for (auto& [e, x] : w.c) {
    auto it = v.c.find(e);
    if (it == v.c.end()) {
      v.c.emplace(e, k * x);
    } else {
      it->second = it->second + k * x;
      if (it->second.is_zero()) v.c.erase(it);
    }
  }
}

template <class K>
Vec<K> scaled(Vec<K> v, const K& k) {
  if (k.is_zero()) return Vec<K>{};
  for (auto& [e, x] : v.c) x = x * k;
  return v;
}

template <class K>
Vec<K> shifted(const Vec<K>& v, int d) {
  Vec<K> w;
  for (auto& [e, x] : v.c) w.c.emplace(e + d, x);
  return w;
}

/// Drops coordinates at exponents >= h (passing to the quotient by the
/// corresponding tail lattice; always sound).
template <class K>
Vec<K> drop_above(Vec<K> v, int h) {
  v.c.erase(v.c.lower_bound(h), v.c.end());
  return v;
}

template <class K>
Vec<K> drop_below(Vec<K> v, int l) {
  v.c.erase(v.c.begin(), v.c.lower_bound(l));
  return v;
}

/// Reduced row echelon subspace of a window [lo, hi). Pivots sit at the
/// highest exponent of each row, the pivot coefficient is 1, a pivot
/// exponent appears in no other row, and rows are kept sorted by strictly
/// decreasing pivot. Reduced echelon form is canonical per subspace, so
/// operator== decides span equality.
template <class K>
class EchelonSpace {
 public:
  EchelonSpace() = default;
  EchelonSpace(int lo, int hi) : lo_(lo), hi_(hi) {}

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int dim() const { return (int)rows_.size(); }
  const std::vector<Vec<K>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool has_pivot(int e) const {
    for (int p : pivots_)
      if (p == e) return true;
    return false;
  }

  /// Linear in v: rows carry no foreign pivot exponents, so one pass
  /// eliminates every pivot coordinate and the residual is canonical.
  Vec<K> reduce(Vec<K> v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      K k = v.coeff(pivots_[i]);
      if (!k.is_zero()) axpy(v, -k, rows_[i]);
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return reduce(v).is_zero(); }

  /// Inserts v into the span; returns false if v was already contained.
  bool insert(Vec<K> v) {
    check_window(v);
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    int e = v.top();
    v = scaled(std::move(v), v.coeff(e).inv());
    size_t pos = 0;
    while (pos < rows_.size() && pivots_[pos] > e) ++pos;
    rows_.insert(rows_.begin() + pos, v);
    pivots_.insert(pivots_.begin() + pos, e);
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i == pos) continue;
      K k = rows_[i].coeff(e);
      if (!k.is_zero()) axpy(rows_[i], -k, rows_[pos]);
    }
    return true;
  }

  bool operator==(const EchelonSpace& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && rows_ == o.rows_;
  }

 private:
  void check_window(const Vec<K>& v) const {
    if (v.is_zero()) return;
    if (v.c.begin()->first < lo_ || v.top() >= hi_)
      throw window_error("vector leaves ambient window");
  }

  int lo_ = 0, hi_ = 0;
  std::vector<Vec<K>> rows_;
  std::vector<int> pivots_;
};

template <class K>
EchelonSpace<K> echelonize(int lo, int hi, const std::vector<Vec<K>>& vecs) {
  EchelonSpace<K> s(lo, hi);
  for (auto& v : vecs) s.insert(v);
  return s;
}

/// Span of the unit vectors t^e with e in [lo, hi) satisfying pred.
template <class K>
EchelonSpace<K> pure_space(int lo, int hi, const std::function<bool(int)>& pred) {
  EchelonSpace<K> s(lo, hi);
  for (int e = hi - 1; e >= lo; --e)
    if (pred(e)) s.insert(unit_vec<K>(e));
  return s;
}

template <class K>
EchelonSpace<K> space_sum(const EchelonSpace<K>& a, const EchelonSpace<K>& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) throw window_error("ambient mismatch");
  EchelonSpace<K> s = a;
  for (auto& r : b.rows()) s.insert(r);
  return s;
}

/// Exact subspace intersection (Zassenhaus on the doubled window).
template <class K>
EchelonSpace<K> space_intersect(const EchelonSpace<K>& a, const EchelonSpace<K>& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) throw window_error("ambient mismatch");
  int w = a.hi() - a.lo();
  EchelonSpace<K> work(a.lo(), a.hi() + w);
  for (auto& r : a.rows()) {
    Vec<K> v = shifted(r, w);
    for (auto& [e, k] : r.c) v.c.emplace(e, k);
    work.insert(v);
  }
  for (auto& r : b.rows()) work.insert(shifted(r, w));
  EchelonSpace<K> out(a.lo(), a.hi());
  for (size_t i = 0; i < work.rows().size(); ++i)
    if (work.pivots()[i] < a.hi()) out.insert(work.rows()[i]);
  return out;
}

/// dim A/(A cap B) = dim(A+B) - dim B.
template <class K>
int quotient_dim(const EchelonSpace<K>& a, const EchelonSpace<K>& b) {
  return space_sum(a, b).dim() - b.dim();
}

/// Kernel of the linear map x -> (sum_i x_i rows[i]) restricted to the given
/// constraint coordinates; returns a basis of coefficient vectors x.
template <class K>
std::vector<std::vector<K>> kernel_combos(const std::vector<Vec<K>>& rows,
                                          const std::vector<int>& constraints) {
  size_t n = rows.size(), m = constraints.size();
  std::vector<std::vector<K>> mat(m, std::vector<K>(n, K(0)));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < m; ++i) mat[i][j] = rows[j].coeff(constraints[i]);
  // column-style Gaussian elimination tracking pivot columns
  std::vector<int> pivot_col_of_row(m, -1);
  std::vector<bool> is_pivot_col(n, false);
  size_t r = 0;
  for (size_t j = 0; j < n && r < m; ++j) {
    size_t sel = r;
    while (sel < m && mat[sel][j].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(mat[sel], mat[r]);
    K inv = mat[r][j].inv();
    for (size_t jj = 0; jj < n; ++jj) mat[r][jj] = mat[r][jj] * inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      K k = mat[i][j];
      if (k.is_zero()) continue;
      for (size_t jj = 0; jj < n; ++jj) mat[i][jj] = mat[i][jj] - k * mat[r][jj];
    }
    pivot_col_of_row[r] = (int)j;
    is_pivot_col[j] = true;
    ++r;
  }
  std::vector<std::vector<K>> basis;
  for (size_t j = 0; j < n; ++j) {
    if (is_pivot_col[j]) continue;
    std::vector<K> x(n, K(0));
    x[j] = K(1);
    for (size_t i = 0; i < r; ++i)
      x[pivot_col_of_row[i]] = -mat[i][j];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// The subspace {v in A : supp(v) within allowed exponents}.
template <class K>
EchelonSpace<K> sub_with_support(const EchelonSpace<K>& a,
                                 const std::function<bool(int)>& allowed) {
  std::vector<int> constraints;
  for (int e = a.lo(); e < a.hi(); ++e)
    if (!allowed(e)) constraints.push_back(e);
  EchelonSpace<K> out(a.lo(), a.hi());
  for (auto& x : kernel_combos(a.rows(), constraints)) {
    Vec<K> v;
    for (size_t i = 0; i < x.size(); ++i) axpy(v, x[i], a.rows()[i]);
    out.insert(v);
  }
  return out;
}

/// Copies a space into a new ambient window; the support must fit.
template <class K>
EchelonSpace<K> re_ambient(const EchelonSpace<K>& a, int lo, int hi) {
  EchelonSpace<K> out(lo, hi);
  for (auto& r : a.rows()) out.insert(r);
  return out;
}

}  // namespace grstab
