#pragma once

#include <complex>
#include <span>
#include <vector>

namespace toeplitz {

/// Floating-coefficient polynomial, ascending order.
using ComplexPoly = std::vector<std::complex<double>>;

/// All roots of a polynomial with floating coefficients. Seeds from the
/// companion-matrix eigenvalues, then runs Aberth–Ehrlich iterations in
/// long double until the corrections stall.
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs);

/// lead * prod (z - r).
ComplexPoly poly_from_roots(std::span<const std::complex<double>> roots, std::complex<double> lead = 1.0);

std::complex<double> eval(std::span<const std::complex<double>> coeffs, std::complex<double> z);

ComplexPoly multiply(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b);

}  // namespace toeplitz
