#pragma once

#include <complex>
#include <vector>

#include "toeplitz/numeric_roots.hpp"
#include "toeplitz/operator_profile.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz {

inline constexpr double kFejerRieszTolerance = 1e-10;
inline constexpr double kRootPairingTolerance = 1e-8;

struct SpectralFactor {
  ComplexPoly r;
  std::vector<std::complex<double>> roots;  // all outside the closed disk
  /// max over circle samples of | |r|^2 - (|s~|^2 + |q~|^2) |
  double residual = 0;
};

/// r with |r|^2 = |s~|^2 + |q~|^2 on the circle, no roots in the closed disk
/// and arg r(0) = arg q~(0).
SpectralFactor fejer_riesz(const Poly& s_tilde, const Poly& q_tilde);

struct CanonicalTriple {
  SpectralFactor factor;
  ComplexPoly a_numer;  // q~
  ComplexPoly b_numer;  // s~
  // a = a_numer / r, b = b_numer / r
  std::complex<double> a_at_zero;
  double unit_residual = 0;  // max | |a|^2 + |b|^2 - 1 | on the circle
  double min_root_modulus = 0;
  SpaceDescriptor sarason_domain;  // q~ H^2
};

inline constexpr int kCircleSamples = 512;

CanonicalTriple canonical_form(const RationalSymbol& omega_tilde);

}  // namespace toeplitz
