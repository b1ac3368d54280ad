#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "toeplitz/gaussian_rational.hpp"
#include "toeplitz/poly.hpp"
#include "toeplitz/rational_function.hpp"
#include "toeplitz/rootloc.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// TOEPLITZ_LAB_SEED if set and numeric, else the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

/// Root with its multiplicity and location, for polynomials built from roots.
struct PlannedRoot {
  GaussianRational value;
  int multiplicity = 1;
};

/// Random generators for exact test data. Everything is reproducible from
/// the seed.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  mpq_class rational(int max_num = 5, int max_den = 4);
  GaussianRational gaussian(int max_num = 5, int max_den = 4);
  GaussianRational nonzero_gaussian(int max_num = 5, int max_den = 4);
  /// Exact point on the unit circle from a Pythagorean triple.
  GaussianRational unit();

  /// Degree exactly deg, random Gaussian-rational coefficients.
  Poly poly(int deg);
  Poly real_poly(int deg);
  /// Roots on the circle, exactly factorable.
  Poly circle_poly(int deg);
  /// radius * unit for a random unit.
  GaussianRational root_at_radius(const mpq_class& radius);

  /// Function with poles outside the closed disk (or a polynomial).
  RationalFunction analytic_function(int max_numer_deg, int max_denom_deg);

  /// Reduced RatT symbol with 1 <= m <= max_m. When proper, n <= m.
  RationalSymbol ratt_symbol(int max_m, int max_n, bool proper);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// c * prod (z - root)^mult.
Poly poly_from_planned(const std::vector<PlannedRoot>& roots, const GaussianRational& lead = 1);

/// Counts by construction (exact comparisons of |root|^2 with 1).
RootCounts planned_counts(const std::vector<PlannedRoot>& roots);

}  // namespace toeplitz
