#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/literal.hpp"
#include "toeplitz/poly.hpp"

using namespace toeplitz;
using namespace toeplitz::test;

TEST(GaussianRational, FieldArithmetic) {
  const auto a = C(1, 2);
  const auto b = Q(3, 4) + Q(1, 2) * I;
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a * a.conj(), Q(5));
  EXPECT_EQ(I * I, Q(-1));
  EXPECT_THROW(a / Q(0), Error);
}

TEST(Poly, SharpExamples) {
  EXPECT_EQ(sharp(Poly{2, 1}), (Poly{1, 2}));
  EXPECT_EQ(sharp(Poly{1, 0, -1}), (Poly{-1, 0, 1}));
  EXPECT_EQ(sharp(Poly{-I, -I}), (Poly{I, I}));
}

TEST(Poly, SelfInversiveExamples) {
  EXPECT_EQ(self_inversive(Poly{1, 0, -1}), Q(-1));
  EXPECT_EQ(self_inversive(Poly{1, 1}), Q(1));
  EXPECT_FALSE(self_inversive(Poly{Q(-1, 2), 1}).has_value());
}

TEST(Poly, SharpSumWitnessExamples) {
  const auto w = sharp_sum_witness(Poly{1, 1}, Poly{1, -1});
  EXPECT_EQ(w.sharp_sum, Poly{2});
  EXPECT_EQ(w.shift1, -1);
  EXPECT_EQ(w.shift2, -1);
  const auto w2 = sharp_sum_witness(Poly{0, 1}, Poly{1});
  EXPECT_EQ(w2.sharp_sum, (Poly{1, 1}));
  EXPECT_EQ(w2.shift1, 0);
  EXPECT_EQ(w2.shift2, 1);
  const Poly p1 = I * Poly{1, 3, 1};
  const Poly p2 = I * Poly{1, 0, -1};
  EXPECT_EQ(sharp_sum_witness(p1, p2).sharp_sum, sharp(I * Poly{2, 3}));
}

TEST(Poly, DivremExamples) {
  const auto d = divrem(Poly{0, 0, 1}, Poly{-1, 1});
  EXPECT_EQ(d.quotient, (Poly{1, 1}));
  EXPECT_EQ(d.remainder, Poly{1});
  const Poly p{C(1, 2), 3, Q(1, 2)};
  EXPECT_EQ(divrem(p, Poly{1}).quotient, p);
  EXPECT_TRUE(divrem(p, Poly{1}).remainder.is_zero());
  const Poly zs = Poly::z() * (I * Poly{1, 3, 1});
  const Poly q{1, 0, -1};
  const auto r = divrem(zs, q);
  EXPECT_LT(r.remainder.deg(), 2);
  EXPECT_EQ(r.quotient * q + r.remainder, zs);
  EXPECT_THROW(divrem(p, Poly{}), Error);
}

TEST(Poly, GcdExamples) {
  EXPECT_EQ(gcd(Poly{-1, 0, 1}, Poly{-1, 1}), (Poly{-1, 1}));
  EXPECT_EQ(gcd(I * Poly{1, 2, 1}, Poly{1, 0, -1}), (Poly{1, 1}));
  EXPECT_EQ(gcd(Poly{0, 1}, Poly{-1, 1}), Poly{1});
}

TEST(Poly, InverseMod) {
  const Poly m{1, 0, 1};
  const Poly a{2, 1};
  const auto u = inverse_mod(a, m);
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(divrem(a * *u, m).remainder, Poly{1});
  EXPECT_FALSE(inverse_mod(Poly{-I, 1}, m).has_value());
}

TEST(Poly, ToString) {
  EXPECT_EQ((Poly{1, 0, -1}).to_string(), "1 - z^2");
  EXPECT_EQ((Poly{-I, -I}).to_string(), "-i - iz");
}

TEST(PolyProperties, SharpInvolutionAndMultiplicativity) {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const Poly p = rng.poly(rng.uniform(0, 8));
    const Poly q = rng.poly(rng.uniform(0, 8));
    EXPECT_EQ(sharp(p * q), sharp(p) * sharp(q));
    EXPECT_EQ(sharp(p).deg(), p.deg() - p.valuation());
    if (!p.coeff(0).is_zero()) EXPECT_EQ(sharp(sharp(p)), p);
    const Poly shifted = p.shifted(2);
    EXPECT_EQ(sharp(shifted).deg(), shifted.deg() - shifted.valuation());
  }
}

TEST(PolyProperties, SelfInversiveGammaUnimodular) {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const Poly p = rng.poly(rng.uniform(0, 5));
    // p + conj-reverse is self-inversive with gamma = 1 whenever nonzero
    const Poly s = p.shifted(0) + sharp_formal(p, p.deg());
    if (s.is_zero() || s.coeff(0).is_zero()) continue;
    const auto g = self_inversive(s);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(g->norm(), mpq_class(1));
  }
}

TEST(PolyProperties, DivremReconstruction) {
  Rng rng(13);
  for (int k = 0; k < 1000; ++k) {
    const Poly p = rng.poly(rng.uniform(0, 12));
    const Poly d = rng.poly(rng.uniform(0, 6));
    const auto r = divrem(p, d);
    EXPECT_EQ(r.quotient * d + r.remainder, p);
    EXPECT_TRUE(r.remainder.is_zero() || r.remainder.deg() < d.deg());
  }
}

TEST(PolyProperties, SharpSumIdentity) {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const Poly p1 = rng.poly(rng.uniform(0, 6));
    Poly p2 = rng.poly(rng.uniform(0, 6));
    if (k % 4 == 0) p2 = -p1 + rng.poly(rng.uniform(0, 2));  // forces cancellation
    const Poly sum = p1 + p2;
    if (sum.is_zero()) continue;
    const auto w = sharp_sum_witness(p1, p2);
    EXPECT_EQ(w.shift1, sum.deg() - p1.deg());
    EXPECT_EQ(w.shift2, sum.deg() - p2.deg());
    EXPECT_EQ(w.sharp_sum, sharp(sum));
    const int lift = std::max({0, -w.shift1, -w.shift2});
    EXPECT_EQ(sharp(sum).shifted(lift), sharp(p1).shifted(lift + w.shift1) + sharp(p2).shifted(lift + w.shift2));
  }
}

TEST(Literal, Examples) {
  EXPECT_EQ(parse_poly_literal(R"(["-i", "-i"])"), (Poly{-I, -I}));
  EXPECT_EQ(parse_poly_literal(R"(["1", "0", "-1"])"), (Poly{1, 0, -1}));
  EXPECT_TRUE(parse_poly_literal("[]").is_zero());
  EXPECT_EQ(parse_complex_literal("3/2"), Q(3, 2));
  EXPECT_EQ(parse_complex_literal("-1+2i"), C(-1, 2));
  EXPECT_EQ(parse_complex_literal("i"), I);
  EXPECT_EQ(parse_complex_literal("2/3-1/5i"), Q(2, 3) - Q(1, 5) * I);
}

TEST(Literal, RejectsWithPosition) {
  try {
    parse_poly_literal(R"(["1", "2x"])");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
    EXPECT_FALSE(e.expected().empty());
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
  EXPECT_THROW(parse_poly_literal("[1,"), ParseError);
  EXPECT_THROW(parse_poly_literal("1, 2"), ParseError);
  EXPECT_THROW(parse_complex_literal("1/0"), ParseError);
  EXPECT_THROW(parse_complex_literal(""), ParseError);
}

TEST(Literal, RoundTripIsBitExact) {
  Rng rng(19);
  for (int k = 0; k < 300; ++k) {
    const Poly p = k % 10 == 0 ? Poly{} : rng.poly(rng.uniform(0, 8));
    const std::string text = emit_poly_literal(p);
    EXPECT_EQ(parse_poly_literal(text), p);
    EXPECT_EQ(emit_poly_literal(parse_poly_literal(text)), text);
  }
}
