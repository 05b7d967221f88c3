#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grstab/echelon.hpp"

#include <random>

using namespace grstab;
using Q = Rat;

namespace {
template <class K>
Vec<K> vec(std::initializer_list<std::pair<int, K>> terms) {
  Vec<K> v;
  for (auto& [e, k] : terms) v.set(e, k);
  return v;
}

// brute-force span enumeration over GF(2) window vectors
std::vector<Vec<Fp>> gf2_span(const std::vector<Vec<Fp>>& gens) {
  std::vector<Vec<Fp>> out;
  size_t n = gens.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    Vec<Fp> v;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) axpy(v, Fp(1, 2), gens[i]);
    out.push_back(v);
  }
  return out;
}
}  // namespace

TEST_CASE("echelonize drops dependent rows and reduces") {
  auto s = echelonize<Q>(0, 3, {vec<Q>({{1, Q(1)}}), vec<Q>({{1, Q(2)}})});
  CHECK(s.dim() == 1);
  CHECK(s.pivots() == std::vector<int>{1});

  auto s2 = echelonize<Q>(0, 3, {vec<Q>({{1, Q(1)}, {0, Q(1)}}), vec<Q>({{1, Q(1)}})});
  CHECK(s2.dim() == 2);
  CHECK(s2.pivots() == std::vector<int>{1, 0});
  CHECK(s2.rows()[0] == vec<Q>({{1, Q(1)}}));  // reduced: pivot 0 eliminated
  CHECK(s2.rows()[1] == vec<Q>({{0, Q(1)}}));

  CHECK(echelonize<Q>(0, 3, {}).dim() == 0);
}

TEST_CASE("intersection, sum and quotient dimensions") {
  auto a = echelonize<Q>(0, 2, {vec<Q>({{1, Q(1)}}), vec<Q>({{0, Q(1)}})});
  auto b = echelonize<Q>(0, 2, {vec<Q>({{1, Q(1)}})});
  auto meet = space_intersect(a, b);
  CHECK(meet.dim() == 1);
  CHECK(meet.rows()[0] == vec<Q>({{1, Q(1)}}));

  auto l1 = echelonize<Q>(0, 2, {vec<Q>({{1, Q(1)}})});
  auto l2 = echelonize<Q>(0, 2, {vec<Q>({{0, Q(1)}})});
  CHECK(space_sum(l1, l2).dim() == 2);

  auto c = echelonize<Q>(0, 2, {vec<Q>({{1, Q(1)}, {0, Q(1)}})});
  CHECK(space_intersect(c, l1).dim() == 0);
  CHECK(quotient_dim(a, b) == 1);
}

TEST_CASE("gf(2) brute force agrees with exact intersection") {
  // ambient of dim 2: span{t+1} cap span{t} = 0
  auto c = echelonize<Fp>(0, 2, {vec<Fp>({{1, Fp(1, 2)}, {0, Fp(1, 2)}})});
  auto l = echelonize<Fp>(0, 2, {vec<Fp>({{1, Fp(1, 2)}})});
  auto meet = space_intersect(c, l);
  int count = 0;  // count nonzero common vectors by enumeration
  for (auto& v : gf2_span(c.rows()))
    for (auto& w : gf2_span(l.rows()))
      if (!v.is_zero() && v == w) ++count;
  CHECK(meet.dim() == 0);
  CHECK(count == 0);
}

TEST_CASE("dim A + dim B = dim(A+B) + dim(A cap B) on random spaces") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> expo(-3, 4), coef(0, 4), rows(0, 3);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Vec<Fp>> ra, rb;
    for (int i = rows(rng); i >= 0; --i) {
      Vec<Fp> v;
      for (int j = 0; j < 3; ++j) v.set(expo(rng), Fp(coef(rng), 5));
      ra.push_back(v);
    }
    for (int i = rows(rng); i >= 0; --i) {
      Vec<Fp> v;
      for (int j = 0; j < 3; ++j) v.set(expo(rng), Fp(coef(rng), 5));
      rb.push_back(v);
    }
    auto a = echelonize<Fp>(-4, 6, ra), b = echelonize<Fp>(-4, 6, rb);
    CHECK(a.dim() + b.dim() == space_sum(a, b).dim() + space_intersect(a, b).dim());
  }
}

TEST_CASE("support-restricted subspaces") {
  auto a = echelonize<Q>(-2, 3, {vec<Q>({{2, Q(1)}, {-1, Q(1)}}), vec<Q>({{1, Q(1)}}),
                                 vec<Q>({{0, Q(1)}, {-2, Q(1)}})});
  auto nonneg = sub_with_support<Q>(a, [](int e) { return e >= 0; });
  CHECK(nonneg.dim() == 1);
  CHECK(nonneg.rows()[0] == vec<Q>({{1, Q(1)}}));
  auto even = sub_with_support<Q>(a, [](int e) { return (((e % 2) + 2) % 2) == 0; });
  CHECK(even.dim() == 1);
}

TEST_CASE("ambient mismatch raises") {
  auto a = echelonize<Q>(0, 2, {});
  auto b = echelonize<Q>(0, 3, {});
  CHECK_THROWS_AS(space_sum(a, b), window_error);
  CHECK_THROWS_AS(space_intersect(a, b), window_error);
}
