#include "toeplitz/numeric_roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "toeplitz/errors.hpp"

namespace toeplitz {

namespace {

using cld = std::complex<long double>;

void eval_with_derivative(std::span<const std::complex<double>> c, cld z, cld& p, cld& dp) {
  p = 0;
  dp = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + cld(it->real(), it->imag());
  }
}

}  // namespace

std::complex<double> eval(std::span<const std::complex<double>> coeffs, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoly multiply(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b) {
  if (a.empty() || b.empty()) return {};
  ComplexPoly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

ComplexPoly poly_from_roots(std::span<const std::complex<double>> roots, std::complex<double> lead) {
  ComplexPoly p{lead};
  for (const auto& r : roots) {
    const std::complex<double> f[2] = {-r, 1.0};
    p = multiply(p, f);
  }
  return p;
}

std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == std::complex<double>(0.0, 0.0)) --n;
  if (n == 0) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const std::size_t deg = n - 1;
  if (deg == 0) return {};
  const auto c = coeffs.first(n);

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -c[i] / c[deg];
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<cld> z(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    const auto e = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    z[i] = cld(e.real(), e.imag());
  }

  // Aberth–Ehrlich polishing.
  for (int iter = 0; iter < 60; ++iter) {
    long double max_step = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      cld p, dp;
      eval_with_derivative(c, z[i], p, dp);
      if (p == cld(0)) continue;
      const cld ratio = p / dp;
      cld sum = 0;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i && z[i] != z[j]) sum += cld(1) / (z[i] - z[j]);
      }
      const cld step = ratio / (cld(1) - ratio * sum);
      if (!std::isfinite(std::abs(step))) continue;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max<long double>(1, std::abs(z[i])));
    }
    if (max_step < 1e-18L) break;
  }

  std::vector<std::complex<double>> out(deg);
  std::transform(z.begin(), z.end(), out.begin(), [](const cld& x) {
    return std::complex<double>(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  });
  return out;
}

}  // namespace toeplitz
