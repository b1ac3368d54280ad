#include "toeplitz/rational_function.hpp"

#include "toeplitz/errors.hpp"
#include "toeplitz/rootloc.hpp"

namespace toeplitz {

RationalFunction::RationalFunction(Poly numer, Poly denom) {
  if (denom.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (numer.is_zero()) {
    numer_ = {};
    denom_ = Poly::one();
    return;
  }
  const Poly g = gcd(numer, denom);
  numer = exact_div(numer, g);
  denom = exact_div(denom, g);
  const GaussianRational inv = GaussianRational(1) / denom.leading();
  numer_ = numer * inv;
  denom_ = denom * inv;
}

bool RationalFunction::analytic_on_closed_disk() const {
  return count_roots(denom_).closed_disk() == 0;
}

GaussianRational RationalFunction::value_at_zero() const {
  const GaussianRational d0 = denom_.coeff(0);
  if (d0.is_zero()) fail(ErrorCode::PolesInClosedDisk, "pole at 0");
  return numer_.coeff(0) / d0;
}

std::vector<GaussianRational> RationalFunction::taylor(int count) const {
  return series_coefficients(numer_, denom_, count);
}

std::complex<double> RationalFunction::eval(std::complex<double> z) const {
  return numer_.eval(z) / denom_.eval(z);
}

RationalFunction RationalFunction::backward_shift() const {
  const GaussianRational f0 = value_at_zero();
  const Poly top = numer_ - f0 * denom_;
  return {top.shifted(-1), denom_};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.numer_ * b.denom_ + b.numer_ * a.denom_, a.denom_ * b.denom_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.numer_ * b.denom_ - b.numer_ * a.denom_, a.denom_ * b.denom_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.numer_ * b.numer_, a.denom_ * b.denom_};
}

RationalFunction operator*(const Poly& a, const RationalFunction& b) {
  return {a * b.numer_, b.denom_};
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return numer_.to_string();
  return "(" + numer_.to_string() + ")/(" + denom_.to_string() + ")";
}

}  // namespace toeplitz
