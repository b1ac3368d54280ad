#include <gtest/gtest.h>

#include "support.hpp"
#include "toeplitz/apply_engine.hpp"
#include "toeplitz/corpus.hpp"
#include "toeplitz/errors.hpp"

using namespace toeplitz;
using namespace toeplitz::test;

namespace {

RationalFunction poly_fn(const Poly& p) { return RationalFunction::polynomial(p); }
RationalSymbol helson1() { return make_symbol(-I * Poly{1, 1}, Poly{-1, 1}); }

// Brute-force pairing from Taylor coefficients, for geometric tails that decay fast.
GaussianRational truncated_pairing(const RationalFunction& f, const RationalFunction& g, int terms) {
  const auto a = f.taylor(terms);
  const auto b = g.taylor(terms);
  GaussianRational sum;
  for (int k = 0; k < terms; ++k) sum += a[k] * b[k].conj();
  return sum;
}

}  // namespace

TEST(ApplyForward, Examples) {
  const auto pole = make_symbol(Poly{1}, Poly{-1, 1});
  EXPECT_TRUE(apply_forward(pole, {poly_fn(Poly{}), Poly{1}}).is_zero());

  const auto omega = helson1();
  EXPECT_EQ(apply_forward(omega, {poly_fn(Poly{}), Poly{1}}), poly_fn(Poly{-I}));
  const RationalFunction h(Poly{1, 2}, Poly{-3, 1});
  EXPECT_EQ(apply_forward(omega, {h, Poly{}}), RationalFunction(omega.s(), Poly{1}) * h);
}

TEST(ApplyForward, Preconditions) {
  const auto omega = helson1();
  try {
    apply_forward(omega, {poly_fn(Poly{}), Poly{1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooLarge);
  }
  try {
    apply_forward(omega, {RationalFunction(Poly{1}, Poly{Q(-1, 2), 1}), Poly{}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PolesInClosedDisk);
  }
}

TEST(ApplyAdjoint, Examples) {
  EXPECT_EQ(apply_adjoint(helson1(), poly_fn(Poly{1})), poly_fn(I * Poly{1, 1}));
  EXPECT_EQ(apply_adjoint(make_symbol(Poly{1}, Poly{-1, 1}), poly_fn(Poly{1})), poly_fn(Poly::z()));
  const Poly s = lin(Q(1, 2)) * lin(Q(1, 3)) * lin(Q(1, 4));
  const auto omega = make_symbol(s, Poly{-1, 1});
  EXPECT_TRUE(apply_adjoint(omega, RationalFunction(Poly{1}, sharp(s))).is_zero());
}

TEST(HardyPairing, Examples) {
  EXPECT_EQ(hardy_pairing(poly_fn(Poly{1, 1}), poly_fn(Poly{1, 1})), Q(2));
  EXPECT_EQ(hardy_pairing(poly_fn(Poly::z()), poly_fn(Poly{1})), Q(0));
  EXPECT_EQ(hardy_pairing(RationalFunction(Poly{1}, Poly{-2, 1}), RationalFunction(Poly{1}, Poly{-3, 1})), Q(1, 5));
  // double pole: f_k = (k+1)/2^{k+2}, g_k = -1/3^{k+1}, sum = -3/25
  EXPECT_EQ(hardy_pairing(RationalFunction(Poly{1}, pow(Poly{-2, 1}, 2)), RationalFunction(Poly{1}, Poly{-3, 1})),
            Q(-3, 25));
}

TEST(HardyPairing, MatchesTruncatedSeries) {
  Corpus c(307);
  for (int k = 0; k < 40; ++k) {
    const auto f = c.analytic_function(3, 2);
    const auto g = c.analytic_function(3, 2);
    const auto exact = hardy_pairing(f, g).to_complex();
    const auto approx = truncated_pairing(f, g, 400).to_complex();
    EXPECT_NEAR(std::abs(exact - approx), 0.0, 1e-9 * std::max(1.0, std::abs(exact)));
    EXPECT_EQ(hardy_pairing(g, f), hardy_pairing(f, g).conj());
  }
}

TEST(AdjointIdentity, ExampleAndCorpus) {
  EXPECT_TRUE(adjoint_identity_check(helson1(), {poly_fn(Poly{}), Poly{1}}, poly_fn(Poly{1})).is_zero());
  Corpus c(311);
  for (int k = 0; k < 200; ++k) {
    const auto omega = c.ratt_symbol(4, 4, c.coin());
    const Poly r = omega.m() > 0 && c.coin() ? c.poly(c.uniform(0, omega.m() - 1)) : Poly{};
    const DomElement f{c.analytic_function(3, 2), r};
    const auto v = c.analytic_function(3, 2);
    ASSERT_TRUE(adjoint_identity_check(omega, f, v).is_zero())
        << omega.s().to_string() << " / " << omega.q().to_string();
  }
}

TEST(Compression, Examples) {
  EXPECT_EQ(compression_solve(helson1(), Poly{1}), Poly{-I});
  EXPECT_TRUE(compression_solve(make_symbol(Poly{1}, pow(Poly{-1, 1}, 2)), Poly{1, 1}).is_zero());
}

TEST(Compression, AgreesWithDivision) {
  Corpus c(313);
  for (int k = 0; k < 100; ++k) {
    const auto omega = c.ratt_symbol(8, 8, true);
    const Poly r1 = omega.m() > 0 ? c.poly(c.uniform(0, omega.m() - 1)) : Poly{};
    EXPECT_EQ(compression_solve(omega, r1), divrem(r1 * omega.s(), omega.q()).quotient);
  }
}

TEST(Szego, Examples) {
  const auto cert = szego_eigen(make_symbol(Poly{1}, pow(Poly{-1, 1}, 2)), Q(1, 2));
  EXPECT_EQ(cert.c, Q(1));
  const auto h = szego_eigen(helson1(), Q(0));
  EXPECT_EQ(h.c, -I);
  EXPECT_EQ(h.r, Poly{2 * I});
  EXPECT_THROW(szego_eigen(helson1(), Q(1)), Error);
}

TEST(Szego, CertificateMatchesDirectEvaluation) {
  Corpus c(317);
  for (int k = 0; k < 50; ++k) {
    const auto omega = c.ratt_symbol(5, 5, true);
    GaussianRational lambda;
    do lambda = c.gaussian(3, 4);
    while (lambda.norm() >= 1 || lambda.is_zero());
    const auto cert = szego_eigen(omega, lambda);
    const Poly kernel{1, -lambda.conj()};
    EXPECT_EQ(omega.s() + kernel * cert.r, omega.q() * cert.c);
    const auto direct = omega.eval(Q(1) / lambda.conj());
    if (direct) EXPECT_EQ(*direct, cert.c);
  }
}

TEST(Sarason, HelsonProbe) {
  const auto p = sarason_axioms_probe(helson1(), {poly_fn(Poly{}), Poly{1}});
  EXPECT_TRUE(p.axiom1);
  EXPECT_TRUE(p.axiom2);
  EXPECT_FALSE(p.axiom3_applicable);
  EXPECT_EQ(p.shifted.h, poly_fn(Poly{1}));
  EXPECT_EQ(p.shifted.r, Poly{1});
}

TEST(Sarason, AxiomTwoOnCorpus) {
  Corpus c(331);
  for (int k = 0; k < 60; ++k) {
    const auto omega = c.ratt_symbol(4, 4, c.coin());
    const Poly r = omega.m() > 0 ? c.poly(c.uniform(0, omega.m() - 1)) : Poly{};
    const auto p = sarason_axioms_probe(omega, {c.analytic_function(2, 2), r});
    EXPECT_TRUE(p.axiom1);
    EXPECT_TRUE(p.axiom2);
    if (p.axiom3_applicable) EXPECT_TRUE(p.axiom3);
  }
}

TEST(MultipleSpace, CoprimeCancellation) {
  Corpus c(337);
  const Poly phi = lin(Q(1)) * lin(I);
  for (int k = 0; k < 40; ++k) {
    const auto g = c.analytic_function(2, 2);
    const Poly r = lin(c.root_at_radius(mpq_class(1, 2)));  // coprime to phi
    const RationalFunction rg = RationalFunction(r, Poly{1}) * g;
    EXPECT_EQ(in_multiple_space(rg, phi), in_multiple_space(g, phi));
    const RationalFunction multiple = RationalFunction(phi, Poly{1}) * g;
    EXPECT_TRUE(in_multiple_space(multiple, phi));
  }
}
