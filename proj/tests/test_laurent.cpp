#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grstab/laurent.hpp"

#include <random>

using namespace grstab;
using Q = Rat;

namespace {
Laurent<Q> zq(std::initializer_list<std::pair<int, Q>> t) { return lpoly<Q>('z', t); }
}  // namespace

TEST_CASE("multiplication of Laurent polynomials") {
  CHECK(zq({{-2, Q(1)}}) * zq({{3, Q(1)}}) == zq({{1, Q(1)}}));
  CHECK(zq({{0, Q(1)}, {1, Q(1)}}) * zq({{0, Q(1)}, {1, Q(-1)}}) ==
        zq({{0, Q(1)}, {2, Q(-1)}}));
  CHECK(zq({{-2, Q(1)}, {-3, Q(1)}}) * zq({{-2, Q(1)}}) ==
        zq({{-4, Q(1)}, {-5, Q(1)}}));
}

TEST_CASE("precision marker follows the window rule") {
  Laurent<Q> f = zq({{0, Q(1)}, {1, Q(2)}});
  Laurent<Q> g = truncate_above(zq({{0, Q(1)}, {1, Q(1)}, {2, Q(5)}}), 2);
  CHECK(g.hi == 2);
  Laurent<Q> p = f * g;
  CHECK_FALSE(p.exact);
  CHECK(p.hi == 2);  // min(f.lo + g.hi, g.lo + f.hi) = min(0+2, 0+2)
  Laurent<Q> q = f * f;
  CHECK(q.exact);
}

TEST_CASE("precision marker is never larger than the guaranteed precision") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> expo(-4, 4), coef(-3, 3), cut(-2, 5);
  for (int trial = 0; trial < 300; ++trial) {
    Laurent<Q> f = lzero<Q>('z'), g = lzero<Q>('z');
    for (int i = 0; i < 4; ++i) {
      f = f + zq({{expo(rng), Q(coef(rng))}});
      g = g + zq({{expo(rng), Q(coef(rng))}});
    }
    Laurent<Q> exact_prod = f * g;
    int hf = cut(rng), hg = cut(rng);
    Laurent<Q> tf = truncate_above(f, hf), tg = truncate_above(g, hg);
    Laurent<Q> p = tf * tg;
    // every claimed-known coefficient must agree with the exact product
    for (auto& [e, k] : exact_prod.c)
      if (e < p.hi) CHECK(p.coeff(e) == k);
    for (auto& [e, k] : p.c) CHECK(k == exact_prod.coeff(e));
  }
}

TEST_CASE("interleave matches the identification of V with k((t))") {
  auto one = zq({{0, Q(1)}});
  auto zero = lzero<Q>('z');
  CHECK(interleave(vvec(one, zero)) == lpoly<Q>('t', {{0, Q(1)}}));
  CHECK(interleave(vvec(zero, one)) == lpoly<Q>('t', {{1, Q(1)}}));
  CHECK(interleave(vvec(zq({{2, Q(1)}}), zq({{-1, Q(1)}}))) ==
        lpoly<Q>('t', {{4, Q(1)}, {-1, Q(1)}}));
}

TEST_CASE("deinterleave inverts interleave") {
  auto w = lpoly<Q>('t', {{1, Q(1)}});
  auto v = deinterleave(w);
  CHECK(v.a.support_empty());
  CHECK(v.b == zq({{0, Q(1)}}));
  auto w2 = lpoly<Q>('t', {{4, Q(1)}, {-1, Q(1)}});
  auto v2 = deinterleave(w2);
  CHECK(v2.a == zq({{2, Q(1)}}));
  CHECK(v2.b == zq({{-1, Q(1)}}));
  CHECK(deinterleave(lzero<Q>('t')).a.support_empty());

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> expo(-6, 6), coef(-5, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    Laurent<Q> f = lzero<Q>('t', -12, 14);
    for (int i = 0; i < 5; ++i) {
      int e = expo(rng);
      f.c[e] = Q(coef(rng));
    }
    for (auto it = f.c.begin(); it != f.c.end();)
      it = it->second.is_zero() ? f.c.erase(it) : std::next(it);
    auto back = interleave(deinterleave(f));
    CHECK(back.c == f.c);
  }
}

TEST_CASE("interleave maps V0 into nonnegative t-exponents") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> expo(0, 6), coef(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Laurent<Q> a = lzero<Q>('z', 0, 7), b = a;
    for (int i = 0; i < 3; ++i) {
      a.c[expo(rng)] = Q(coef(rng));
      b.c[expo(rng)] = Q(coef(rng));
    }
    for (auto* f : {&a, &b})
      for (auto it = f->c.begin(); it != f->c.end();)
        it = it->second.is_zero() ? f->c.erase(it) : std::next(it);
    auto t = interleave(vvec(a, b));
    if (!t.support_empty()) CHECK(*t.valuation() >= 0);
  }
}

TEST_CASE("window errors") {
  Laurent<Q> inexact = truncate_above(zq({{0, Q(1)}, {3, Q(1)}}), 2);
  CHECK_THROWS_AS(vvec(inexact, lzero<Q>('z', 0, 5, false)), window_error);
  CHECK_THROWS_AS(deinterleave(lzero<Q>('t', -1, 2, false)), window_error);
}

TEST_CASE("unit inversion") {
  auto f = zq({{0, Q(1)}, {1, Q(1)}});
  auto g = invert_unit(f, 6);
  auto p = f * g;
  for (int e = 0; e < 6; ++e) CHECK(p.coeff(e) == (e == 0 ? Q(1) : Q(0)));
  auto h = zq({{-2, Q(3)}, {0, Q(1)}});
  auto hi = invert_unit(h, 4);
  auto q = h * hi;
  for (int e = -1; e < 4; ++e) CHECK(q.coeff(e) == (e == 0 ? Q(1) : Q(0)));
}
