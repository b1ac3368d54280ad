#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/rootloc.hpp"

using namespace toeplitz;
using namespace toeplitz::test;

namespace {

const std::vector<GaussianRational>& units() {
  static const std::vector<GaussianRational> u = {Q(1),         Q(-1),        I,           -I,
                                                  C(3, 4) * Q(1, 5), C(-4, 3) * Q(1, 5), C(5, -12) * Q(1, 13),
                                                  C(-8, -15) * Q(1, 17)};
  return u;
}

struct Built {
  Poly p;
  RootCounts counts;
};

// Polynomial from a root multiset with radii drawn from {1/3, 1/2, 1, 1, 2, 3}.
Built build(Rng& rng, int deg) {
  static const std::vector<std::pair<long, long>> radii = {{1, 3}, {1, 2}, {1, 1}, {1, 1}, {2, 1}, {3, 1}};
  Built b{Poly{rng.gaussian().is_zero() ? Q(1) : C(rng.uniform(1, 3), rng.uniform(-2, 2))}, {}};
  for (int k = 0; k < deg; ++k) {
    const auto [num, den] = radii[static_cast<std::size_t>(rng.uniform(0, 5))];
    const auto u = units()[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(units().size()) - 1))];
    b.p *= lin(Q(num, den) * u);
    if (num < den) ++b.counts.inside;
    else if (num == den) ++b.counts.on_circle;
    else ++b.counts.outside;
  }
  return b;
}

RootCounts counts(int in, int on, int out) {
  RootCounts r;
  r.inside = in;
  r.on_circle = on;
  r.outside = out;
  return r;
}

}  // namespace

TEST(CountRoots, Examples) {
  EXPECT_EQ(count_roots(pow(Poly{-1, 1}, 3)), counts(0, 3, 0));
  // iz(3+2z): roots 0 and -3/2, a degree-2 polynomial
  EXPECT_EQ(count_roots(I * Poly{0, 3, 2}), counts(1, 0, 1));
  EXPECT_EQ(count_roots(Poly{1, 0, 3}), counts(2, 0, 0));
  EXPECT_THROW(count_roots(Poly{}), Error);
}

TEST(CountRoots, PlannedMultisets) {
  Rng rng(23);
  for (int k = 0; k < 500; ++k) {
    const auto b = build(rng, rng.uniform(0, 12));
    ASSERT_EQ(count_roots(b.p), b.counts) << b.p.to_string();
  }
}

TEST(CountRoots, RandomTotalsMatchDegree) {
  Rng rng(29);
  for (int k = 0; k < 500; ++k) {
    const Poly p = rng.poly(rng.uniform(0, 12));
    EXPECT_EQ(count_roots(p).total(), p.deg());
  }
}

TEST(CountRoots, ProductIsAdditiveAndSharpSwaps) {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const auto a = build(rng, rng.uniform(0, 5));
    const auto b = build(rng, rng.uniform(0, 5));
    EXPECT_EQ(count_roots(a.p * b.p), count_roots(a.p) + count_roots(b.p));
    Poly with_zero = a.p.shifted(rng.uniform(0, 2));
    const auto c = count_roots(with_zero);
    const auto cs = count_roots(sharp(with_zero));
    EXPECT_EQ(cs.inside, c.outside);
    EXPECT_EQ(cs.outside + with_zero.valuation(), c.inside);
    EXPECT_EQ(cs.on_circle, c.on_circle);
    EXPECT_EQ(cs.total(), c.total() - with_zero.valuation());
  }
}

TEST(CountRoots, ReciprocalPairsAndNearCircle) {
  // alpha and 1/conj(alpha) both present: gcd(p, p#) catches them
  const GaussianRational a = C(1, 1) * Q(1, 3);
  const Poly p = lin(a) * lin(Q(1) / a.conj()) * lin(Q(-1));
  EXPECT_EQ(count_roots(p), counts(1, 1, 1));
  // roots at radius 1 +- 1e-6 stay off the circle in exact arithmetic
  const Poly near = lin(Q(1000001, 1000000)) * lin(Q(-999999, 1000000));
  EXPECT_EQ(count_roots(near), counts(1, 0, 1));
}

TEST(FactorCircle, Examples) {
  const auto f = factor_circle(Poly{Q(-1, 4), 0, 1});
  ASSERT_TRUE(f.exact);
  EXPECT_EQ(f.unit, Q(1));
  EXPECT_EQ(f.part_inside, (Poly{Q(-1, 4), 0, 1}));
  EXPECT_EQ(f.part_on, Poly{1});
  EXPECT_EQ(f.part_outside, Poly{1});

  const auto g = factor_circle(lin(Q(1)) * lin(Q(3)));
  EXPECT_EQ(g.part_on, lin(Q(1)));
  EXPECT_EQ(g.part_outside, lin(Q(3)));

  const Poly h = lin(Q(1, 2)) * pow(lin(Q(1)), 2);
  const auto fh = factor_circle(h);
  EXPECT_EQ(fh.counts, counts(1, 2, 0));
  EXPECT_EQ(fh.part_inside, lin(Q(1, 2)));
  EXPECT_EQ(fh.part_on, pow(lin(Q(1)), 2));
}

TEST(FactorCircle, ReconstructsExactly) {
  Rng rng(37);
  for (int k = 0; k < 100; ++k) {
    const auto b = build(rng, rng.uniform(1, 7));
    const auto f = factor_circle(b.p);
    ASSERT_TRUE(f.exact) << b.p.to_string();
    EXPECT_EQ(f.unit * f.part_inside * f.part_on * f.part_outside, b.p);
    EXPECT_EQ(f.counts, b.counts);
    EXPECT_EQ(f.part_inside.deg(), b.counts.inside);
    EXPECT_EQ(f.part_on.deg(), b.counts.on_circle);
  }
}

TEST(FactorCircle, IrrationalRootsStayNumeric) {
  // z^2 - 2: roots +-sqrt 2 are outside and not in Q(i)
  const auto f = factor_circle(Poly{-2, 0, 1});
  EXPECT_EQ(f.counts, counts(0, 0, 2));
  ASSERT_EQ(f.roots_outside.size(), 2u);
  for (auto r : f.roots_outside) EXPECT_NEAR(std::abs(r), std::sqrt(2.0), 1e-12);
}

TEST(CohnTest, Examples) {
  EXPECT_TRUE(cohn_test(Poly{1, 0, -1}));
  EXPECT_FALSE(cohn_test(lin(Q(1, 2))));
  EXPECT_TRUE(cohn_test(pow(lin(Q(1)), 2) * lin(Q(-1))));
}

TEST(CohnTest, AgreesWithCounts) {
  Rng rng(41);
  int on_circle_cases = 0;
  for (int k = 0; k < 300; ++k) {
    auto b = build(rng, rng.uniform(1, 6));
    const bool expected = b.counts.on_circle == b.p.deg();
    on_circle_cases += expected;
    EXPECT_EQ(cohn_test(b.p), expected) << b.p.to_string();
  }
  EXPECT_GT(on_circle_cases, 5);
}
