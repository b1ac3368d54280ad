#include "toeplitz/smirnov.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "toeplitz/errors.hpp"
#include "toeplitz/rootloc.hpp"

namespace toeplitz {

namespace {

double max_circle_deviation(const ComplexPoly& r, const ComplexPoly& s, const ComplexPoly& q) {
  double worst = 0;
  for (int k = 0; k < kCircleSamples; ++k) {
    const auto z = std::polar(1.0, 2 * std::numbers::pi * k / kCircleSamples);
    const double lhs = std::norm(eval(r, z));
    const double rhs = std::norm(eval(s, z)) + std::norm(eval(q, z));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace

SpectralFactor fejer_riesz(const Poly& s_tilde, const Poly& q_tilde) {
  ensure(!s_tilde.is_zero(), ErrorCode::ZeroNumerator, "s~ is the zero polynomial");
  ensure(!q_tilde.is_zero(), ErrorCode::ZeroDenominator, "q~ is the zero polynomial");
  ensure(!q_tilde.coeff(0).is_zero(), ErrorCode::DenominatorVanishesAtZero, "q~(0) = 0");
  ensure(gcd(s_tilde, q_tilde).deg() == 0, ErrorCode::NotCoprime, "s~ and q~ share a root");

  // z^K L with L = s~ s~_* + q~ q~_* as a Laurent polynomial
  const int ds = s_tilde.deg();
  const int dq = q_tilde.deg();
  const int big_k = std::max(ds, dq);
  const Poly p_full = (s_tilde * sharp(s_tilde)).shifted(big_k - ds) + (q_tilde * sharp(q_tilde)).shifted(big_k - dq);
  const int v = p_full.valuation();
  const int half = big_k - v;
  const Poly p = p_full.shifted(-v);
  ensure(p.deg() == 2 * half, ErrorCode::InternalInconsistency, "Laurent polynomial is not symmetric");

  const RootCounts counts = count_roots(p);
  ensure(counts.on_circle == 0, ErrorCode::CircleRootDetected, "|s~|^2 + |q~|^2 vanishes on the circle");
  ensure(counts.inside == half && counts.outside == half, ErrorCode::InternalInconsistency,
         "roots of the Laurent polynomial do not pair across the circle");

  SpectralFactor out;
  const auto factors = square_free_factors(p);
  for (std::size_t mult = 0; mult < factors.size(); ++mult) {
    const Poly& f = factors[mult];
    if (f.deg() == 0) continue;
    const auto coeffs = to_complex(f);
    auto roots = polynomial_roots(coeffs);
    std::vector<std::complex<double>> outside;
    std::vector<std::complex<double>> inside;
    for (auto r : roots) (std::abs(r) < 1 ? inside : outside).push_back(r);
    ensure(inside.size() == outside.size(), ErrorCode::CircleRootDetected, "unpaired root of the Laurent polynomial");
    std::vector<bool> used(outside.size(), false);
    for (auto alpha : inside) {
      const auto mirror = 1.0 / std::conj(alpha);
      std::size_t best = outside.size();
      double best_dist = 0;
      for (std::size_t j = 0; j < outside.size(); ++j) {
        if (used[j]) continue;
        const double dist = std::abs(outside[j] - mirror);
        if (best == outside.size() || dist < best_dist) {
          best = j;
          best_dist = dist;
        }
      }
      ensure(best < outside.size() && best_dist <= kRootPairingTolerance * std::abs(mirror),
             ErrorCode::CircleRootDetected, "root without a reflected partner");
      used[best] = true;
      const auto beta = 0.5 * (outside[best] + mirror);
      for (std::size_t c = 0; c <= mult; ++c) out.roots.push_back(beta);
    }
  }

  std::complex<double> prod = 1;
  for (auto beta : out.roots) prod *= -std::conj(beta);
  const std::complex<double> lead = p.leading().to_complex();
  const double c2 = std::abs(lead / prod);
  ComplexPoly r = poly_from_roots(out.roots, std::sqrt(c2));

  const std::complex<double> u = r[0] / q_tilde.coeff(0).to_complex();
  const std::complex<double> phase = std::conj(u) / std::abs(u);
  for (auto& c : r) c *= phase;
  out.r = std::move(r);
  out.residual = max_circle_deviation(out.r, to_complex(s_tilde), to_complex(q_tilde));
  return out;
}

CanonicalTriple canonical_form(const RationalSymbol& omega_tilde) {
  ensure(omega_tilde.is_ratt(), ErrorCode::NotRatT, "canonical form needs all poles on the unit circle");
  CanonicalTriple out;
  out.factor = fejer_riesz(omega_tilde.s(), omega_tilde.q());
  out.a_numer = to_complex(omega_tilde.q());
  out.b_numer = to_complex(omega_tilde.s());
  out.a_at_zero = out.a_numer[0] / out.factor.r[0];
  double worst = 0;
  for (int k = 0; k < kCircleSamples; ++k) {
    const auto z = std::polar(1.0, 2 * std::numbers::pi * k / kCircleSamples);
    const auto rz = eval(out.factor.r, z);
    const double sum = std::norm(eval(out.a_numer, z) / rz) + std::norm(eval(out.b_numer, z) / rz);
    worst = std::max(worst, std::abs(sum - 1));
  }
  out.unit_residual = worst;
  out.min_root_modulus = std::numeric_limits<double>::infinity();
  for (auto beta : out.factor.roots) out.min_root_modulus = std::min(out.min_root_modulus, std::abs(beta));
  out.sarason_domain.inner_factor = omega_tilde.q();
  return out;
}

}  // namespace toeplitz
