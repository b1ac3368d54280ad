#pragma once

#include <complex>
#include <string>

#include "toeplitz/poly.hpp"

namespace toeplitz {

/// numer/denom in lowest terms with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : numer_(), denom_(Poly::one()) {}
  RationalFunction(Poly numer, Poly denom);
  static RationalFunction polynomial(Poly p) { return {std::move(p), Poly::one()}; }

  const Poly& numer() const { return numer_; }
  const Poly& denom() const { return denom_; }

  bool is_zero() const { return numer_.is_zero(); }
  bool is_polynomial() const { return denom_.deg() == 0; }
  /// Denominator has no roots in the closed unit disk, so the function lies
  /// in every H^p.
  bool analytic_on_closed_disk() const;

  GaussianRational value_at_zero() const;
  /// Taylor coefficients f_0..f_{count-1}.
  std::vector<GaussianRational> taylor(int count) const;
  std::complex<double> eval(std::complex<double> z) const;

  /// (f - f(0)) / z.
  RationalFunction backward_shift() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const Poly& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  Poly numer_;
  Poly denom_;
};

}  // namespace toeplitz
