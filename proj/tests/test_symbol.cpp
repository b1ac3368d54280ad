#include <gtest/gtest.h>

#include "support.hpp"
#include "toeplitz/corpus.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/selfadjoint.hpp"
#include "toeplitz/symbol.hpp"

using namespace toeplitz;
using namespace toeplitz::test;

namespace {

const Poly kS1 = -I * Poly{1, 1};  // Helson k = 1
const Poly kQ1{-1, 1};

RationalFunction rf(const Poly& n, const Poly& d) { return {n, d}; }

RationalFunction z_pow(int k) { return k >= 0 ? rf(Poly::monomial(1, k), Poly{1}) : rf(Poly{1}, Poly::monomial(1, -k)); }

// f / g is a nonzero constant
bool proportional(const RationalFunction& f, const RationalFunction& g) {
  const RationalFunction ratio(f.numer() * g.denom(), f.denom() * g.numer());
  return ratio.numer().deg() == 0 && ratio.denom().deg() == 0;
}

}  // namespace

TEST(MakeSymbol, Examples) {
  const auto a = make_symbol(I * Poly{1, 2, 1}, Poly{1, 0, -1});
  EXPECT_TRUE(a.reduction().reduced);
  EXPECT_EQ(rf(a.s(), a.q()), rf(I * Poly{1, 1}, Poly{1, -1}));
  EXPECT_EQ(a.m(), 1);

  const auto h = make_symbol(kS1, kQ1);
  EXPECT_FALSE(h.reduction().reduced);
  EXPECT_EQ(h.s(), kS1);
  EXPECT_EQ(h.q(), kQ1);
  EXPECT_EQ(h.symbol_class(), SymbolClass::RatT);

  EXPECT_EQ(make_symbol(Poly::z(), lin(Q(1, 2))).symbol_class(), SymbolClass::GeneralRat);
}

TEST(MakeSymbol, Errors) {
  try {
    make_symbol(Poly{1}, Poly{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDenominator);
  }
  try {
    make_symbol(Poly{}, Poly{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroNumerator);
  }
}

TEST(OmegaStar, Examples) {
  const auto a = omega_star(make_symbol(Poly{1}, kQ1));
  EXPECT_EQ(a.shift, 1);
  EXPECT_EQ(rf(a.numer, a.denom), rf(Poly{1}, Poly{1, -1}));

  const auto h = omega_star(make_symbol(kS1, kQ1));
  EXPECT_EQ(h.shift, 0);
  EXPECT_EQ(rf(h.numer, h.denom), rf(kS1, kQ1));

  const auto c = omega_star(make_symbol(Poly{0, 0, 1}, kQ1));
  EXPECT_EQ(c.shift, -1);
  EXPECT_EQ(rf(c.numer, c.denom), rf(Poly{1}, Poly{1, -1}));
}

TEST(OmegaStar, InvolutionOnProperRatT) {
  Corpus c(101);
  for (int k = 0; k < 50; ++k) {
    const auto omega = c.ratt_symbol(5, 5, true);
    const auto twice = omega_star(omega_star(omega).flatten());
    const auto back = twice.flatten();
    EXPECT_EQ(rf(back.s(), back.q()), rf(omega.s(), omega.q()));
  }
}

TEST(WienerHopf, Examples) {
  const auto h = wiener_hopf_split(make_symbol(I * Poly{1, 1}, Poly{1, -1}));
  EXPECT_EQ(h.kappa, 0);
  // the unit constant is carried by the outer factor
  EXPECT_TRUE(proportional(h.zero, rf(I * Poly{1, 1}, Poly{1, -1})));
  EXPECT_TRUE(proportional(h.plus, rf(Poly{1}, Poly{1})));
  EXPECT_EQ(h.minus.as_function(), rf(Poly{1}, Poly{1}));

  const auto b = wiener_hopf_split(make_symbol(lin(Q(1, 2)), pow(kQ1, 2)));
  EXPECT_EQ(b.kappa, 1);
  EXPECT_EQ(b.zero, rf(Poly{1}, pow(kQ1, 2)));
  EXPECT_EQ(b.minus.as_function(), rf(lin(Q(1, 2)), Poly::z()));
  EXPECT_EQ(z_pow(b.kappa) * b.minus.as_function() * b.zero * b.plus, rf(lin(Q(1, 2)), pow(kQ1, 2)));

  const auto c = wiener_hopf_split(make_symbol(lin(Q(3)), lin(Q(1, 2))));
  EXPECT_EQ(c.kappa, -1);
  EXPECT_EQ(c.zero, rf(Poly{1}, Poly{1}));
  EXPECT_EQ(c.minus.as_function(), rf(Poly::z(), lin(Q(1, 2))));
  EXPECT_EQ(z_pow(c.kappa) * c.minus.as_function() * c.zero * c.plus, rf(lin(Q(3)), lin(Q(1, 2))));
}

TEST(WienerHopf, ProductIdentity) {
  Corpus c(103);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const RationalFunction f = c.analytic_function(3, 3);
    const Poly s = c.coin() ? f.numer() * c.circle_poly(c.uniform(0, 2)) : c.poly(c.uniform(0, 4));
    const Poly q = c.circle_poly(c.uniform(0, 3)) * (c.coin() ? lin(c.root_at_radius(mpq_class(1, 2))) : Poly{1});
    if (s.is_zero()) continue;
    const auto omega = make_symbol(s, q);
    if (!omega.splits_exact()) continue;
    const auto w = wiener_hopf_split(omega);
    EXPECT_EQ(z_pow(w.kappa) * w.minus.as_function() * w.zero * w.plus, omega.as_function());
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(RealOnCircle, Examples) {
  const auto h = real_on_circle(make_symbol(kS1, kQ1));
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->gamma, Q(-1));
  EXPECT_TRUE(real_on_circle(make_symbol(I * Poly{1, 3, 1}, Poly{1, 0, -1})).has_value());
  EXPECT_FALSE(real_on_circle(make_symbol(Poly{1}, kQ1)).has_value());
  EXPECT_THROW(real_on_circle(make_symbol(Poly{1}, lin(Q(2)))), Error);
}

TEST(CayleyCompose, Examples) {
  const auto w1 = cayley_compose(Poly{0, 1}, Poly{1});
  EXPECT_EQ(w1.as_function(), rf(kS1, kQ1));
  const auto w2 = cayley_compose(Poly{0, 0, 1}, Poly{1});
  EXPECT_EQ(w2.as_function(), rf(-pow(Poly{1, 1}, 2), pow(kQ1, 2)));
  const auto inv = cayley_compose(Poly{1}, Poly{0, 1});
  EXPECT_EQ(inv.as_function(), rf(I * kQ1, Poly{1, 1}));
  EXPECT_THROW(cayley_compose(Poly{I}, Poly{1}), Error);
}

TEST(Symmetry, CayleyOutputsAreSymmetricAndRoutesAgree) {
  Corpus c(107);
  for (int k = 0; k < 100; ++k) {
    Poly sr = c.real_poly(c.uniform(0, 4));
    Poly qr = c.real_poly(c.uniform(0, 4));
    if (sr.is_zero() || qr.is_zero()) continue;
    const auto omega = cayley_compose(sr, qr, false);
    if (!omega.is_ratt()) continue;
    const auto w = real_on_circle(omega);
    ASSERT_TRUE(w.has_value()) << omega.s().to_string() << " / " << omega.q().to_string();
    EXPECT_EQ(symmetry_by_coefficients(omega).has_value(), conjugate_symmetric(omega));
    EXPECT_LE(omega.n(), omega.m());
    EXPECT_LE(omega.m(), 2 * omega.n());
    EXPECT_EQ(count_roots(omega.s() + I * omega.q()).on_circle, 0);
    EXPECT_EQ(count_roots(omega.s() - I * omega.q()).on_circle, 0);
  }
}

TEST(ImageClassify, Examples) {
  EXPECT_EQ(circle_image_classify(helson_symbol(2)), ImageClass::RealProperSubset);
  EXPECT_EQ(circle_image_classify(helson_symbol(1)), ImageClass::RealFullLine);
  EXPECT_EQ(circle_image_classify(make_symbol(Poly{1}, kQ1)), ImageClass::NotRealValued);
}

TEST(SampleCurve, FlagsPoles) {
  const auto curve = sample_curve(make_symbol(Poly{1}, kQ1), 8);
  ASSERT_EQ(curve.size(), 8u);
  EXPECT_TRUE(curve[0].at_pole);
  EXPECT_FALSE(curve[4].at_pole);
  EXPECT_NEAR(curve[4].value.real(), -0.5, 1e-12);
}
