#include "toeplitz/corpus.hpp"

#include <array>
#include <cstdlib>
#include <string>

#include "toeplitz/errors.hpp"

namespace toeplitz {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("TOEPLITZ_LAB_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used == std::string(env).size()) return value;
  } catch (const std::exception&) {
  }
  return fallback;
}

int Corpus::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

mpq_class Corpus::rational(int max_num, int max_den) {
  mpq_class q(uniform(-max_num, max_num), uniform(1, max_den));
  q.canonicalize();
  return q;
}

GaussianRational Corpus::gaussian(int max_num, int max_den) {
  return {rational(max_num, max_den), rational(max_num, max_den)};
}

GaussianRational Corpus::nonzero_gaussian(int max_num, int max_den) {
  while (true) {
    GaussianRational g = gaussian(max_num, max_den);
    if (!g.is_zero()) return g;
  }
}

GaussianRational Corpus::unit() {
  static constexpr std::array<std::array<int, 3>, 6> triples{{{1, 0, 1}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}}};
  const auto& t = triples[static_cast<std::size_t>(uniform(0, triples.size() - 1))];
  int a = t[0];
  int b = t[1];
  if (coin()) std::swap(a, b);
  if (coin()) a = -a;
  if (coin()) b = -b;
  return GaussianRational::from_ratios(a, t[2], b, t[2]);
}

Poly Corpus::poly(int deg) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k < deg; ++k) c[k] = gaussian();
  c[deg] = nonzero_gaussian();
  return Poly(std::move(c));
}

Poly Corpus::real_poly(int deg) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k < deg; ++k) c[k] = rational();
  mpq_class lead = 0;
  while (lead == 0) lead = rational();
  c[deg] = lead;
  return Poly(std::move(c));
}

Poly Corpus::circle_poly(int deg) {
  Poly out = Poly::constant(nonzero_gaussian());
  for (int k = 0; k < deg; ++k) out *= Poly{-unit(), 1};
  return out;
}

GaussianRational Corpus::root_at_radius(const mpq_class& radius) { return GaussianRational(radius) * unit(); }

RationalFunction Corpus::analytic_function(int max_numer_deg, int max_denom_deg) {
  static const std::array<mpq_class, 4> radii{mpq_class(5, 4), mpq_class(3, 2), mpq_class(2), mpq_class(3)};
  Poly numer = poly(uniform(0, max_numer_deg));
  Poly denom = Poly::one();
  const int dd = uniform(0, max_denom_deg);
  for (int k = 0; k < dd; ++k) {
    denom *= Poly{-root_at_radius(radii[static_cast<std::size_t>(uniform(0, radii.size() - 1))]), 1};
  }
  return {numer, denom};
}

RationalSymbol Corpus::ratt_symbol(int max_m, int max_n, bool proper) {
  while (true) {
    const int m = uniform(1, max_m);
    const int n = uniform(0, proper ? std::min(m, max_n) : max_n);
    const Poly q = circle_poly(m);
    const Poly s = poly(n);
    if (gcd(s, q).deg() != 0) continue;
    return make_symbol(s, q);
  }
}

Poly poly_from_planned(const std::vector<PlannedRoot>& roots, const GaussianRational& lead) {
  Poly out = Poly::constant(lead);
  for (const auto& r : roots) out *= pow(Poly{-r.value, 1}, r.multiplicity);
  return out;
}

RootCounts planned_counts(const std::vector<PlannedRoot>& roots) {
  RootCounts c;
  for (const auto& r : roots) {
    const int order = cmp(r.value.norm(), 1);
    (order < 0 ? c.inside : order == 0 ? c.on_circle : c.outside) += r.multiplicity;
  }
  return c;
}

}  // namespace toeplitz
