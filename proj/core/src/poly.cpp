#include "toeplitz/poly.hpp"

#include <algorithm>
#include <sstream>

#include "toeplitz/errors.hpp"

namespace toeplitz {

int Degree::value() const {
  if (!value_) fail(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  return *value_;
}

std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
  if (a.is_minus_infinity() || b.is_minus_infinity()) {
    return b.is_minus_infinity() <=> a.is_minus_infinity();
  }
  return *a.value_ <=> *b.value_;
}

Poly::Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const GaussianRational& c) { return Poly({c}); }

Poly Poly::monomial(const GaussianRational& c, int k) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(std::span<const GaussianRational> roots) {
  Poly p = one();
  for (const auto& r : roots) p *= Poly{-r, 1};
  return p;
}

Degree Poly::degree() const {
  if (c_.empty()) return Degree::minus_infinity();
  return Degree::of(static_cast<int>(c_.size()) - 1);
}

int Poly::deg() const { return degree().value(); }

GaussianRational Poly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return {};
  return c_[static_cast<std::size_t>(k)];
}

const GaussianRational& Poly::leading() const {
  if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

GaussianRational Poly::eval(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

int Poly::valuation() const {
  if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "valuation of zero polynomial");
  int k = 0;
  while (c_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::conj_coeffs() const {
  std::vector<GaussianRational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.conj());
  return Poly(std::move(v));
}

Poly Poly::shifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  if (k > 0) {
    std::vector<GaussianRational> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }
  const auto drop = static_cast<std::size_t>(-k);
  for (std::size_t j = 0; j < std::min(drop, c_.size()); ++j) {
    if (!c_[j].is_zero()) fail(ErrorCode::IdentityFailure, "z^" + std::to_string(-k) + " does not divide polynomial");
  }
  if (drop >= c_.size()) return {};
  return Poly(std::vector<GaussianRational>(c_.begin() + static_cast<std::ptrdiff_t>(drop), c_.end()));
}

Poly Poly::truncated(int k) const {
  if (k <= 0) return {};
  const auto n = std::min(c_.size(), static_cast<std::size_t>(k));
  return Poly(std::vector<GaussianRational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Poly Poly::monic() const {
  const GaussianRational lc = leading();
  Poly out = *this;
  const GaussianRational inv = GaussianRational(1) / lc;
  out *= inv;
  return out;
}

bool Poly::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& c) { return c.is_real(); });
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<GaussianRational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) out[a + b] += c_[a] * o.c_[b];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

Poly operator-(Poly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    GaussianRational c = c_[k];
    // pull a leading minus into the separator for real and pure imaginary terms
    const bool negative = (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (negative) c = -c;
    const std::string text = c.to_string();
    if (k == 0) {
      os << text;
      continue;
    }
    if (c == GaussianRational(1)) {
      // bare monomial
    } else if (!c.is_real() && sgn(c.re()) != 0) {
      os << "(" << text << ")";
    } else {
      os << text;
    }
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly pow(const Poly& p, int k) {
  Poly out = Poly::one();
  for (int j = 0; j < k; ++j) out *= p;
  return out;
}

Poly sharp_formal(const Poly& p, int k) {
  if (p.is_zero()) return {};
  if (k < p.deg()) fail(ErrorCode::IdentityFailure, "formal reversal degree below actual degree");
  std::vector<GaussianRational> v(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= p.deg(); ++j) v[static_cast<std::size_t>(k - j)] = p[static_cast<std::size_t>(j)].conj();
  return Poly(std::move(v));
}

Poly sharp(const Poly& p) {
  if (p.is_zero()) return {};
  return sharp_formal(p, p.deg());
}

std::optional<GaussianRational> self_inversive(const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "self_inversive of zero polynomial");
  const GaussianRational p0 = p.coeff(0);
  if (p0.is_zero()) return std::nullopt;
  const GaussianRational gamma = p0 / p.leading().conj();
  if (gamma.norm() != 1) return std::nullopt;
  if (p != gamma * sharp(p)) return std::nullopt;
  return gamma;
}

SharpSumWitness sharp_sum_witness(const Poly& p1, const Poly& p2) {
  if (p1.is_zero() || p2.is_zero()) fail(ErrorCode::ZeroPolynomial, "sharp_sum_witness needs nonzero summands");
  const Poly sum = p1 + p2;
  if (sum.is_zero()) fail(ErrorCode::ZeroSum, "p1 + p2 = 0");
  const int n = sum.deg();
  const int n1 = p1.deg();
  const int n2 = p2.deg();
  SharpSumWitness w{sharp(sum), n - n1, n - n2};
  // z^e clears negative shifts; e = max(n1, n2) - n >= 0.
  const int e = std::max(n1, n2) - n;
  const Poly lhs = w.sharp_sum.shifted(e);
  const Poly rhs = sharp(p1).shifted(w.shift1 + e) + sharp(p2).shifted(w.shift2 + e);
  if (lhs != rhs) fail(ErrorCode::IdentityFailure, "sharp of a sum identity failed");
  return w;
}

DivRem divrem(const Poly& p, const Poly& d) {
  if (d.is_zero()) fail(ErrorCode::DivisionByZeroPolynomial, "divisor is the zero polynomial");
  if (p.is_zero() || p.deg() < d.deg()) return {Poly{}, p};
  const int dd = d.deg();
  const GaussianRational inv_lc = GaussianRational(1) / d.leading();
  std::vector<GaussianRational> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<GaussianRational> quo(static_cast<std::size_t>(p.deg() - dd) + 1);
  for (int k = p.deg() - dd; k >= 0; --k) {
    const GaussianRational c = rem[static_cast<std::size_t>(k + dd)] * inv_lc;
    quo[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * d[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& p, const Poly& d) {
  auto [q, r] = divrem(p, d);
  if (!r.is_zero()) fail(ErrorCode::IdentityFailure, "inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& p) { return divrem(p, d).remainder.is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::BothZero, "gcd(0, 0)");
  Poly x = a.is_zero() ? b.monic() : a.monic();
  Poly y = a.is_zero() ? Poly{} : (b.is_zero() ? Poly{} : b.monic());
  while (!y.is_zero()) {
    Poly r = divrem(x, y).remainder;
    x = std::move(y);
    y = r.is_zero() ? Poly{} : r.monic();
  }
  return x.monic();
}

std::optional<Poly> inverse_mod(const Poly& a, const Poly& m) {
  if (m.is_zero()) fail(ErrorCode::DivisionByZeroPolynomial, "inverse modulo the zero polynomial");
  if (m.deg() == 0) return Poly{};
  // extended Euclid tracking only the coefficient of a
  Poly r0 = m;
  Poly r1 = divrem(a, m).remainder;
  Poly t0;
  Poly t1 = Poly::one();
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    Poly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.deg() != 0) return std::nullopt;
  return divrem(t0 * (GaussianRational(1) / r0[0]), m).remainder;
}

std::vector<Poly> square_free_factors(const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "square-free decomposition of zero");
  std::vector<Poly> out;
  if (p.deg() == 0) return out;
  const Poly f = p.monic();
  const Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = exact_div(f, a);
  Poly c = exact_div(fp, a);
  Poly d = c - b.derivative();
  while (b.deg() > 0) {
    Poly g = d.is_zero() ? b : gcd(b, d);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().deg() == 0) out.pop_back();
  return out;
}

std::vector<GaussianRational> series_coefficients(const Poly& num, const Poly& den, int count) {
  const GaussianRational d0 = den.coeff(0);
  if (d0.is_zero()) fail(ErrorCode::PolesInClosedDisk, "series expansion with den(0) = 0");
  const GaussianRational inv = GaussianRational(1) / d0;
  std::vector<GaussianRational> c(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    GaussianRational acc = num.coeff(k);
    const int top = den.is_zero() ? 0 : std::min(k, den.deg());
    for (int j = 1; j <= top; ++j) acc -= den[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = acc * inv;
  }
  return c;
}

std::vector<std::complex<double>> to_complex(const Poly& p) {
  std::vector<std::complex<double>> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(c.to_complex());
  return v;
}

}  // namespace toeplitz
