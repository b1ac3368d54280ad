#include "toeplitz/gaussian_rational.hpp"

#include "toeplitz/errors.hpp"

namespace toeplitz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroSum: return "ZeroSum";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ZeroNumerator: return "ZeroNumerator";
    case ErrorCode::NotRatT: return "NotRatT";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::LambdaNotInDisk: return "LambdaNotInDisk";
    case ErrorCode::PolesInClosedDisk: return "PolesInClosedDisk";
    case ErrorCode::NonRealCoefficients: return "NonRealCoefficients";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DenominatorVanishesAtZero: return "DenominatorVanishesAtZero";
    case ErrorCode::CircleRootDetected: return "CircleRootDetected";
    case ErrorCode::InexactFactorization: return "InexactFactorization";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IdentityFailure: return "IdentityFailure";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  return code == ErrorCode::InternalInconsistency || code == ErrorCode::IdentityFailure;
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t position, std::string expected)
    : Error(ErrorCode::ParseError,
            "at position " + std::to_string(position) + ", expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_ratios(long re_num, long re_den, long im_num,
                                               long im_den) {
  return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class d = o.norm();
  if (sgn(d) == 0) fail(ErrorCode::DivisionByZeroPolynomial, "division by zero scalar");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::to_string() const {
  const bool re_zero = sgn(re_) == 0;
  const bool im_zero = sgn(im_) == 0;
  if (im_zero) return rational_to_string(re_);

  auto imag_part = [](const mpq_class& a) {
    if (a == 1) return std::string("i");
    return rational_to_string(a) + "i";
  };

  if (re_zero) {
    if (im_ == -1) return "-i";
    return imag_part(im_);
  }
  std::string out = rational_to_string(re_);
  if (sgn(im_) > 0) {
    out += "+" + imag_part(im_);
  } else {
    out += "-" + imag_part(-im_);
  }
  return out;
}

}  // namespace toeplitz
