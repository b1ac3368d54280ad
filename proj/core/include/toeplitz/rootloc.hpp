#pragma once

#include <complex>
#include <vector>

#include "toeplitz/numeric_roots.hpp"
#include "toeplitz/poly.hpp"

namespace toeplitz {

/// Root counts relative to the unit circle, multiplicities included.
struct RootCounts {
  int inside = 0;
  int on_circle = 0;
  int outside = 0;

  int total() const { return inside + on_circle + outside; }
  /// Roots in the closed unit disk.
  int closed_disk() const { return inside + on_circle; }
  friend bool operator==(const RootCounts&, const RootCounts&) = default;
};

RootCounts operator+(const RootCounts& a, const RootCounts& b);

/// Tolerance on |root| - 1 used when classifying numeric roots.
inline constexpr double kCircleTolerance = 1e-9;
/// Coefficient residual allowed when reconstructing p from numeric factors.
inline constexpr double kFactorTolerance = 1e-10;

/// p = unit * inside * on * outside, with each part monic.
///
/// The counts are always exact. The parts are exact whenever every root group
/// of every square-free factor of p is itself defined over Q(i); otherwise
/// `exact` is false and only the floating parts are meaningful.
struct CircleFactorization {
  bool exact = false;
  GaussianRational unit;
  Poly part_inside;
  Poly part_on;
  Poly part_outside;
  std::complex<double> unit_numeric;
  ComplexPoly inside_numeric;
  ComplexPoly on_numeric;
  ComplexPoly outside_numeric;
  std::vector<std::complex<double>> roots_inside;
  std::vector<std::complex<double>> roots_on;
  std::vector<std::complex<double>> roots_outside;
  RootCounts counts;
};

/// Exact counts. Circle roots are isolated through gcd(p, p#) and a Sturm
/// count after the Cayley substitution; the rest goes through a Schur–Cohn
/// chain.
RootCounts count_roots(const Poly& p);

/// Number of roots of a real polynomial on the real line, with multiplicity.
int count_real_roots(const Poly& real_poly);

/// Roots of p in the open upper half plane, by a Cauchy-index computation.
/// Requires p to have no real roots.
int count_upper_half_plane(const Poly& p);

/// (1 - i t)^k p((1 + i t)/(1 - i t)) with k = deg p, as a polynomial in t.
/// Sends circle roots to real roots and disk roots to the upper half plane.
Poly cayley_transform(const Poly& p);

CircleFactorization factor_circle(const Poly& p);

/// Cohn's criterion: all roots on the circle iff p is self-inversive and p'
/// has all its roots in the closed disk. Independent of count_roots.
bool cohn_test(const Poly& p);

/// All roots in the closed unit disk, via the Schur–Cohn closed-disk
/// recursion (falls back to Cohn's criterion when |a0| = |a_n|).
bool all_roots_in_closed_disk(const Poly& p);

}  // namespace toeplitz
