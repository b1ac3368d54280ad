#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "support.hpp"
#include "toeplitz/corpus.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/operator_profile.hpp"
#include "toeplitz/smirnov.hpp"

using namespace toeplitz;
using namespace toeplitz::test;

namespace {

double max_abs_diff(const ComplexPoly& a, const ComplexPoly& b) {
  double worst = 0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const auto x = k < a.size() ? a[k] : 0.0;
    const auto y = k < b.size() ? b[k] : 0.0;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

}  // namespace

TEST(FejerRiesz, HelsonPairGivesConstantTwo) {
  const auto f = fejer_riesz(I * Poly{1, 1}, Poly{1, -1});
  EXPECT_LT(max_abs_diff(f.r, ComplexPoly{2.0}), 1e-12);
  EXPECT_TRUE(f.roots.empty());
}

TEST(FejerRiesz, GoldenRatioExample) {
  // |1|^2 + |1 + z|^2 = 3 + z + 1/z; r = c (z + t) with t = (3 + sqrt 5)/2
  const auto f = fejer_riesz(Poly{1}, Poly{1, 1});
  const double t = (3 + std::sqrt(5.0)) / 2;
  ASSERT_EQ(f.roots.size(), 1u);
  EXPECT_NEAR(f.roots[0].real(), -t, 1e-12);
  for (int k = 0; k < 64; ++k) {
    const auto z = std::polar(1.0, 2 * std::numbers::pi * k / 64);
    EXPECT_NEAR(std::norm(eval(f.r, z)), 1 + std::norm(1.0 + z), 1e-10);
  }
}

TEST(FejerRiesz, Preconditions) {
  auto code = [](const Poly& s, const Poly& q) {
    try {
      fejer_riesz(s, q);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInconsistency;
  };
  EXPECT_EQ(code(Poly{1}, Poly{0, 1}), ErrorCode::DenominatorVanishesAtZero);
  EXPECT_EQ(code(Poly{1, 1}, Poly{1, 1}), ErrorCode::NotCoprime);
  EXPECT_EQ(code(Poly{}, Poly{1}), ErrorCode::ZeroNumerator);
}

TEST(Canonical, CorpusInvariants) {
  Corpus c(503);
  int done = 0;
  for (int k = 0; k < 80 && done < 40; ++k) {
    const auto omega = c.ratt_symbol(4, 4, c.coin());
    if (omega.q().coeff(0).is_zero()) continue;
    const auto t = canonical_form(omega);
    ++done;
    EXPECT_LE(t.unit_residual, kFejerRieszTolerance);
    EXPECT_GT(t.a_at_zero.real(), 0);
    EXPECT_LE(std::abs(t.a_at_zero.imag()), 1e-12);
    EXPECT_GE(t.min_root_modulus, 1 + kCircleTolerance);
    for (int j = 0; j < kCircleSamples; j += 8) {
      const auto z = std::polar(1.0, 2 * std::numbers::pi * j / kCircleSamples);
      const double lhs = std::norm(eval(t.factor.r, z));
      const double rhs = std::norm(omega.s().eval(z)) + std::norm(omega.q().eval(z));
      EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::max(1.0, rhs));
    }
    // Sarason domain differs from Dom(T) only by the polynomial summand
    const auto dom = profile(omega).domain;
    EXPECT_EQ(dom.inner_factor, t.sarason_domain.inner_factor);
    EXPECT_EQ(static_cast<int>(dom.finite_span.size()), omega.m());
    EXPECT_TRUE(t.sarason_domain.finite_span.empty());
  }
  EXPECT_GE(done, 20);
}

TEST(Canonical, AdjointDomainIsSarasonDomainOfStar) {
  Corpus c(509);
  for (int k = 0; k < 30; ++k) {
    const auto omega = c.ratt_symbol(4, 4, true);
    const auto star = omega_star(omega).flatten();
    const auto adj = adjoint_profile(omega);
    EXPECT_EQ(adj.domain.inner_factor.monic(), sharp(omega.q()).monic());
    EXPECT_EQ(star.q().monic(), adj.domain.inner_factor.monic());
  }
}
