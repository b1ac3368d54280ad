#include "toeplitz/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "toeplitz/errors.hpp"

namespace toeplitz {

const char* to_string(SymbolClass c) {
  return c == SymbolClass::RatT ? "RatT" : "GeneralRat";
}

const char* to_string(ImageClass c) {
  switch (c) {
    case ImageClass::NotRealValued: return "NotRealValued";
    case ImageClass::RealProperSubset: return "RealProperSubset";
    case ImageClass::RealFullLine: return "RealFullLine";
  }
  return "?";
}

RationalSymbol make_symbol(const Poly& s_in, const Poly& q_in) {
  ensure(!q_in.is_zero(), ErrorCode::ZeroDenominator, "denominator q is the zero polynomial");
  ensure(!s_in.is_zero(), ErrorCode::ZeroNumerator, "numerator s is the zero polynomial");

  RationalSymbol out;
  const Poly g = gcd(s_in, q_in);
  if (g.deg() > 0) {
    out.reduction_ = {true, g};
    out.s_ = exact_div(s_in, g);
    out.q_ = exact_div(q_in, g);
  } else {
    out.s_ = s_in;
    out.q_ = q_in;
  }
  out.s_split_ = factor_circle(out.s_);
  out.q_split_ = factor_circle(out.q_);

  auto& d = out.deg_;
  d.m = out.q_.deg();
  d.n = out.s_.deg();
  d.m_minus = out.q_split_.counts.inside;
  d.m_zero = out.q_split_.counts.on_circle;
  d.m_plus = out.q_split_.counts.outside;
  d.n_minus = out.s_split_.counts.inside;
  d.n_zero = out.s_split_.counts.on_circle;
  d.n_plus = out.s_split_.counts.outside;
  out.class_ = (d.m_minus == 0 && d.m_plus == 0) ? SymbolClass::RatT : SymbolClass::GeneralRat;
  return out;
}

std::optional<GaussianRational> RationalSymbol::eval(const GaussianRational& z) const {
  const GaussianRational den = q_.eval(z);
  if (den.is_zero()) return std::nullopt;
  return s_.eval(z) / den;
}

std::complex<double> ShiftedSymbol::eval(std::complex<double> z) const {
  return std::pow(z, shift) * numer.eval(z) / denom.eval(z);
}

RationalFunction ShiftedSymbol::as_function() const {
  if (shift >= 0) return {numer.shifted(shift), denom};
  return {numer, denom.shifted(-shift)};
}

RationalSymbol ShiftedSymbol::flatten() const {
  const RationalFunction f = as_function();
  return make_symbol(f.numer(), f.denom());
}

ShiftedSymbol omega_star(const RationalSymbol& omega) {
  return {omega.m() - omega.n(), sharp(omega.s()), sharp(omega.q())};
}

WienerHopfSplit wiener_hopf_split(const RationalSymbol& omega) {
  const auto& ss = omega.s_split();
  const auto& qs = omega.q_split();
  ensure(omega.splits_exact(), ErrorCode::InexactFactorization,
         "circle split of s or q is not defined over Q(i)");
  const auto& d = omega.degrees();

  WienerHopfSplit out;
  out.kappa = d.n_minus - d.m_minus;
  out.minus = {-out.kappa, ss.part_inside, qs.part_inside};
  out.zero = RationalFunction(ss.part_on, qs.part_on);
  out.plus = RationalFunction(ss.unit * ss.part_outside, qs.unit * qs.part_outside);

  const RationalFunction zk = out.kappa >= 0 ? RationalFunction(Poly::monomial(1, out.kappa), Poly::one())
                                             : RationalFunction(Poly::one(), Poly::monomial(1, -out.kappa));
  const RationalFunction product = out.minus.as_function() * zk * out.zero * out.plus;
  ensure(product == omega.as_function(), ErrorCode::InternalInconsistency,
         "Wiener-Hopf factors do not multiply back to omega");
  return out;
}

bool conjugate_symmetric(const RationalSymbol& omega) {
  const int shift = omega.m() - omega.n();
  const Poly lhs = sharp(omega.s()) * omega.q();
  const Poly rhs = omega.s() * sharp(omega.q());
  return shift >= 0 ? lhs.shifted(shift) == rhs : lhs == rhs.shifted(-shift);
}

std::optional<SymmetryWitness> symmetry_by_coefficients(const RationalSymbol& omega) {
  const Poly& s = omega.s();
  const Poly& q = omega.q();
  const int m = omega.m();
  const int n = omega.n();
  if (n > m) return std::nullopt;
  if (s.valuation() < m - n) return std::nullopt;
  const Poly s_tilde = s.shifted(-(m - n));
  if (!self_inversive(s_tilde)) return std::nullopt;
  const auto gamma = self_inversive(q);
  if (!gamma) return std::nullopt;
  if (q.coeff(0) * s.leading().conj() != q.leading().conj() * s.coeff(m - n)) return std::nullopt;
  return SymmetryWitness{*gamma, s_tilde};
}

std::optional<SymmetryWitness> real_on_circle(const RationalSymbol& omega) {
  ensure(omega.is_ratt(), ErrorCode::NotRatT, "symmetry test needs all poles on the unit circle");
  auto witness = symmetry_by_coefficients(omega);
  ensure(witness.has_value() == conjugate_symmetric(omega), ErrorCode::InternalInconsistency,
         "coefficient test and omega* = omega disagree");
  return witness;
}

RationalSymbol cayley_compose(const Poly& s_real, const Poly& q_real, bool check_real_roots) {
  ensure(s_real.is_real() && q_real.is_real(), ErrorCode::NonRealCoefficients,
         "Cayley composition needs real coefficients");
  ensure(!q_real.is_zero(), ErrorCode::ZeroDenominator, "denominator is the zero polynomial");
  if (check_real_roots) {
    ensure(count_real_roots(q_real) == q_real.deg(), ErrorCode::NotRatT,
           "denominator has non-real roots; the composed poles leave the circle");
  }
  const int big_n = std::max(s_real.is_zero() ? 0 : s_real.deg(), q_real.deg());
  const Poly zp1{1, 1};
  const Poly zm1{-1, 1};
  const GaussianRational minus_i = -GaussianRational::i();
  auto clear = [&](const Poly& p) {
    Poly out;
    GaussianRational w_pow = 1;
    for (int j = 0; j < static_cast<int>(p.size()); ++j) {
      if (!p[j].is_zero()) out += (p[j] * w_pow) * pow(zp1, j) * pow(zm1, big_n - j);
      w_pow *= minus_i;
    }
    return out;
  };
  return make_symbol(clear(s_real), clear(q_real));
}

std::vector<CurveSample> sample_curve(const RationalSymbol& omega, int count) {
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(count));
  const auto s = to_complex(omega.s());
  const auto q = to_complex(omega.q());
  double scale = 0;
  for (auto c : q) scale = std::max(scale, std::abs(c));
  for (int k = 0; k < count; ++k) {
    const double theta = 2 * std::numbers::pi * k / count;
    const std::complex<double> z = std::polar(1.0, theta);
    const auto den = eval(q, z);
    const bool pole = std::abs(den) <= 1e-12 * scale;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.push_back({theta, pole ? std::complex<double>(nan, nan) : eval(s, z) / den, pole});
  }
  return out;
}

ImageClass circle_image_classify(const RationalSymbol& omega) {
  if (!real_on_circle(omega)) return ImageClass::NotRealValued;

  std::vector<double> poles;
  for (auto r : omega.q_split().roots_on) {
    double a = std::arg(r);
    if (a < 0) a += 2 * std::numbers::pi;
    poles.push_back(a);
  }
  std::sort(poles.begin(), poles.end());
  poles.erase(std::unique(poles.begin(), poles.end(), [](double a, double b) { return b - a < 1e-7; }),
              poles.end());
  if (poles.empty()) return ImageClass::RealProperSubset;  // continuous image of a compact set

  const double inf = std::numeric_limits<double>::infinity();
  auto value = [&](double theta) { return omega.eval(std::polar(1.0, theta)).real(); };
  struct Interval {
    double lo;
    double hi;
  };
  std::vector<Interval> parts;
  for (std::size_t j = 0; j < poles.size(); ++j) {
    const double a = poles[j];
    const double b = j + 1 < poles.size() ? poles[j + 1] : poles[0] + 2 * std::numbers::pi;
    const double len = b - a;
    const double delta = len * 1e-7;
    double lo = inf, hi = -inf;
    for (int k = 1; k <= kSamplesPerArc; ++k) {
      const double v = value(a + len * k / (kSamplesPerArc + 1));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    for (double end : {value(a + delta), value(b - delta)}) {
      if (end > 0) hi = inf;
      if (end < 0) lo = -inf;
    }
    parts.push_back({lo, hi});
  }
  std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  if (parts.front().lo != -inf) return ImageClass::RealProperSubset;
  double reach = parts.front().hi;
  for (const auto& p : parts) {
    if (p.lo > reach + 1e-9 * (1 + std::abs(reach))) return ImageClass::RealProperSubset;
    reach = std::max(reach, p.hi);
  }
  return reach == inf ? ImageClass::RealFullLine : ImageClass::RealProperSubset;
}

}  // namespace toeplitz
