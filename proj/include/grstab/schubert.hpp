#pragma once

#include "grstab/grassmann.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace grstab {

/// An element S of S_mu encoded as a finite perturbation of
/// 0(mu) = {mu-1, mu-2, ...}: `added` are the exponents of S above the
/// staircase and `removed` the staircase exponents missing from S.
struct YoungIndex {
  int mu = 0;
  std::set<int> added;
  std::set<int> removed;

  bool contains(int e) const {
    if (added.count(e)) return true;
    return e <= mu - 1 && !removed.count(e);
  }
  static YoungIndex staircase(int mu) { return YoungIndex{mu, {}, {}}; }
  bool is_staircase() const { return added.empty() && removed.empty(); }
  /// Number of boxes of the Young diagram attached to S.
  long long diagram_size() const {
    long long s = 0;
    for (int a : added) s += a;
    for (int r : removed) s -= r;
    return s;
  }
  bool operator==(const YoungIndex&) const = default;
  bool operator<(const YoungIndex& o) const {
    if (mu != o.mu) return mu < o.mu;
    if (added != o.added) return added < o.added;
    return removed < o.removed;
  }
};

inline void validate(const YoungIndex& s) {
  if (s.added.size() != s.removed.size())
    throw std::invalid_argument("young index: |added| != |removed|");
  for (int a : s.added)
    if (a <= s.mu - 1) throw std::invalid_argument("young index: added exponent inside staircase");
  for (int r : s.removed)
    if (r > s.mu - 1) throw std::invalid_argument("young index: removed exponent outside staircase");
}

/// The decreasing sequence s_{-mu+1} > s_{-mu+2} > ... restricted to
/// entries >= bound (the tail below is -k).
inline std::vector<int> sequence_down_to(const YoungIndex& s, int bound) {
  std::vector<int> seq;
  for (auto it = s.added.rbegin(); it != s.added.rend(); ++it) seq.push_back(*it);
  for (int e = s.mu - 1; e >= bound; --e)
    if (!s.removed.count(e)) seq.push_back(e);
  return seq;
}

/// Componentwise dominance s'_k >= s_k of two indices with the same mu.
inline bool dominates(const YoungIndex& a, const YoungIndex& b) {
  if (a.mu != b.mu) throw std::invalid_argument("dominance needs equal mu");
  int bound = a.mu - 1;
  for (int r : a.removed) bound = std::min(bound, r);
  for (int r : b.removed) bound = std::min(bound, r);
  auto sa = sequence_down_to(a, bound), sb = sequence_down_to(b, bound);
  size_t n = std::min(sa.size(), sb.size());
  for (size_t k = 0; k < n; ++k)
    if (sa[k] < sb[k]) return false;
  // beyond the shorter list both sequences agree with the tail -k
  return sa.size() >= sb.size();
}

/// The even/odd pivot-count indices of S: n1 counts the l1-direction
/// (even t-exponents, the line k((t^2))), n2 the l2-direction, with
/// n1 + n2 = mu and n = n1 - n2.
struct NCounts {
  int n1 = 0, n2 = 0, n = 0;
};

inline NCounts n_counts(const YoungIndex& s) {
  validate(s);
  auto count = [&](int parity) {
    int present = 0;  // elements of S that are >= 0 with this parity
    for (int a : s.added)
      if (a >= 0 && (((a % 2) + 2) % 2) == parity) ++present;
    for (int e = 0; e <= s.mu - 1; ++e)
      if (e % 2 == parity && !s.removed.count(e)) ++present;
    int absent = 0;  // negative exponents of this parity missing from S
    for (int r : s.removed)
      if (r < 0 && (((r % 2) + 2) % 2) == parity) ++absent;
    for (int e = s.mu; e < 0; ++e)
      if ((((e % 2) + 2) % 2) == parity && !s.added.count(e)) ++absent;
    return present - absent;
  };
  NCounts n;
  n.n1 = count(0);
  n.n2 = count(1);
  n.n = n.n1 - n.n2;
  return n;
}

namespace detail {
inline void subsets_of_size(const std::vector<int>& pool, size_t r, size_t start,
                            std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& emit) {
  if (cur.size() == r) {
    emit(cur);
    return;
  }
  for (size_t i = start; i + (r - cur.size()) <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets_of_size(pool, r, i + 1, cur, emit);
    cur.pop_back();
  }
}
}  // namespace detail

/// All S in S_mu whose perturbation lies inside the frame's guard-interior;
/// the count is the number of partitions fitting the corresponding box.
inline std::vector<YoungIndex> enumerate_indices(int mu, const WindowFrame& f) {
  std::vector<int> add_pool, rem_pool;
  for (int e = mu; e < f.interior_hi(); ++e) add_pool.push_back(e);
  for (int e = f.interior_lo(); e <= mu - 1; ++e) rem_pool.push_back(e);
  std::vector<YoungIndex> out;
  size_t rmax = std::min(add_pool.size(), rem_pool.size());
  for (size_t r = 0; r <= rmax; ++r) {
    std::vector<std::vector<int>> adds, rems;
    std::vector<int> cur;
    detail::subsets_of_size(add_pool, r, 0, cur, [&](const std::vector<int>& s) { adds.push_back(s); });
    detail::subsets_of_size(rem_pool, r, 0, cur, [&](const std::vector<int>& s) { rems.push_back(s); });
    for (auto& a : adds)
      for (auto& b : rems)
        out.push_back(YoungIndex{mu, std::set<int>(a.begin(), a.end()),
                                 std::set<int>(b.begin(), b.end())});
  }
  return out;
}

/// Window image of H_S (span of t^s, s in S).
template <class K>
EchelonSpace<K> h_space(const YoungIndex& s, const WindowFrame& f) {
  validate(s);
  for (int a : s.added)
    if (a < f.lo() || a >= f.hi()) throw window_error("index exceeds frame");
  for (int r : s.removed)
    if (r < f.lo() || r >= f.hi()) throw window_error("index exceeds frame");
  return pure_space<K>(f.lo(), f.hi(), [&](int e) { return s.contains(e); });
}

/// Window image of A_S (closed span of t^q, q not in S).
template <class K>
EchelonSpace<K> a_space(const YoungIndex& s, const WindowFrame& f) {
  validate(s);
  return pure_space<K>(f.lo(), f.hi(), [&](int e) { return !s.contains(e); });
}

inline bool in_guard_interior(const YoungIndex& s, const WindowFrame& f) {
  for (int a : s.added)
    if (a < f.interior_lo() || a >= f.interior_hi()) return false;
  for (int r : s.removed)
    if (r < f.interior_lo() || r >= f.interior_hi()) return false;
  return true;
}

template <class K>
K det_exact(std::vector<std::vector<K>> m) {
  size_t n = m.size();
  K det(1);
  for (size_t j = 0; j < n; ++j) {
    size_t sel = j;
    while (sel < n && m[sel][j].is_zero()) ++sel;
    if (sel == n) return K(0);
    if (sel != j) {
      std::swap(m[sel], m[j]);
      det = -det;
    }
    det = det * m[j][j];
    K inv = m[j][j].inv();
    for (size_t i = j + 1; i < n; ++i) {
      K k = m[i][j] * inv;
      if (k.is_zero()) continue;
      for (size_t jj = j; jj < n; ++jj) m[i][jj] = m[i][jj] - k * m[j][jj];
    }
  }
  return det;
}

/// Plucker coordinate pi_S(W) for the canonical admissible basis: the
/// echelon rows ordered by decreasing pivot, completed below the frame by
/// the identity tail. Equals the determinant of the rows' coefficients at
/// the window exponents of S; nonzero iff the window splits as
/// body (+) A_S.
template <class K>
K pluecker(const GrassPoint<K>& w, const YoungIndex& s) {
  if (!w.certified) throw certification_error("pluecker requires a certified point");
  if (s.mu != w.mu) throw std::invalid_argument("index mu mismatch");
  if (!in_guard_interior(s, w.frame)) throw precision_error("index outside guard-interior");
  const auto& rows = w.body.rows();
  std::vector<int> sexp;  // S cap [lo, hi), decreasing
  for (int e = w.frame.hi() - 1; e >= w.frame.lo(); --e)
    if (s.contains(e)) sexp.push_back(e);
  if (sexp.size() != rows.size())
    throw precision_error("window cannot pair S with the body rows");
  size_t n = rows.size();
  std::vector<std::vector<K>> m(n, std::vector<K>(n, K(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = rows[j].coeff(sexp[i]);
  return det_exact(std::move(m));
}

/// The cell of W: its pivot set read as a Young index.
template <class K>
YoungIndex cell_of(const GrassPoint<K>& w) {
  YoungIndex s;
  s.mu = w.mu;
  for (int p : w.body.pivots())
    if (p > w.mu - 1) s.added.insert(p);
  for (int e = w.frame.lo(); e <= w.mu - 1 && e < w.frame.hi(); ++e)
    if (!w.body.has_pivot(e)) s.removed.insert(e);
  if (s.added.size() != s.removed.size())
    throw certification_error("body rank inconsistent with claimed index");
  return s;
}

/// min over S in S(W) of n(S), an explicit marker standing for minus
/// infinity when l1 meets W trivially inside the window.
struct MinN {
  bool unbounded = false;
  int value = 0;
  std::optional<YoungIndex> witness;
};

template <class K>
MinN min_n_bruteforce(const GrassPoint<K>& w) {
  auto even = [](int e) { return (((e % 2) + 2) % 2) == 0; };
  if (sub_with_support<K>(w.body, even).dim() == 0) return MinN{true, 0, std::nullopt};
  YoungIndex cell = cell_of(w);
  MinN best;
  bool have = false;
  for (auto& s : enumerate_indices(w.mu, w.frame)) {
    if (!dominates(s, cell)) continue;  // S(W) is upward closed from the cell
    if (pluecker(w, s).is_zero()) continue;
    int n = n_counts(s).n;
    if (!have || n < best.value) {
      best.value = n;
      best.witness = s;
      have = true;
    }
  }
  if (!have) throw precision_error("no enumerable index in S(W); enlarge the frame");
  return best;
}

/// The closed form: 2 (dim W cap l1 cap V0 - dim l1/(W cap l1 + V0 cap l1)) - mu.
template <class K>
MinN min_n_formula(const GrassPoint<K>& w) {
  auto even = [](int e) { return (((e % 2) + 2) % 2) == 0; };
  EchelonSpace<K> wl1 = sub_with_support<K>(w.body, even);
  if (wl1.dim() == 0) return MinN{true, 0, std::nullopt};
  int h0 = sub_with_support<K>(wl1, [&](int e) { return e >= 0; }).dim();
  EchelonSpace<K> cover = wl1;
  for (int e = 0; e < w.frame.hi(); ++e)
    if (even(e)) cover.insert(unit_vec<K>(e));
  int l1_window = (w.frame.hi() - w.frame.lo()) / 2;
  int h1 = l1_window - cover.dim();
  return MinN{false, 2 * (h0 - h1) - w.mu, std::nullopt};
}

}  // namespace grstab
