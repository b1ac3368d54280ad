#pragma once

#include <compare>
#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toeplitz/gaussian_rational.hpp"

namespace toeplitz {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which is a distinct state: asking for its integer value throws.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  static Degree of(int d) { return Degree(d); }

  bool is_minus_infinity() const { return !value_.has_value(); }
  int value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b);

 private:
  Degree() = default;
  explicit Degree(int d) : value_(d) {}
  std::optional<int> value_;
};

/// Polynomial in z with Gaussian-rational coefficients, ascending order.
/// Trailing zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussianRational> coeffs);
  Poly(std::initializer_list<GaussianRational> coeffs);

  static Poly constant(const GaussianRational& c);
  static Poly monomial(const GaussianRational& c, int k);
  static Poly z() { return monomial(1, 1); }
  static Poly one() { return constant(1); }
  /// prod_j (z - roots[j])
  static Poly from_roots(std::span<const GaussianRational> roots);

  bool is_zero() const { return c_.empty(); }
  Degree degree() const;
  /// Integer degree; throws ZeroPolynomial for the zero polynomial.
  int deg() const;
  std::size_t size() const { return c_.size(); }

  const GaussianRational& operator[](std::size_t k) const { return c_[k]; }
  GaussianRational coeff(int k) const;
  const GaussianRational& leading() const;
  std::span<const GaussianRational> coeffs() const { return c_; }

  GaussianRational eval(const GaussianRational& z) const;
  std::complex<double> eval(std::complex<double> z) const;

  /// Multiplicity of 0 as a root.
  int valuation() const;
  Poly derivative() const;
  Poly conj_coeffs() const;
  /// Multiply by z^k (k >= 0) or divide exactly by z^{-k} (k < 0; throws
  /// IdentityFailure if the low coefficients are nonzero).
  Poly shifted(int k) const;
  /// Coefficients of degree < k.
  Poly truncated(int k) const;
  Poly monic() const;
  bool is_real() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussianRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
  friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

Poly pow(const Poly& p, int k);

/// r^sharp(z) = z^deg(r) * conj(r(1/conj z)): conjugate and reverse.
Poly sharp(const Poly& p);
/// Formal reversal with respect to a declared degree k >= deg(p):
/// z^k * conj(p(1/conj z)).
Poly sharp_formal(const Poly& p, int k);

/// gamma with p == gamma * sharp(p), if p is self-inversive.
std::optional<GaussianRational> self_inversive(const Poly& p);

struct SharpSumWitness {
  Poly sharp_sum;
  int shift1 = 0;
  int shift2 = 0;
};

/// (p1+p2)^sharp together with the shifts n-n1, n-n2 of the identity
/// (p1+p2)^sharp = z^{n-n1} p1^sharp + z^{n-n2} p2^sharp, checked exactly.
SharpSumWitness sharp_sum_witness(const Poly& p1, const Poly& p2);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

DivRem divrem(const Poly& p, const Poly& d);
/// p / d, throwing IdentityFailure if d does not divide p.
Poly exact_div(const Poly& p, const Poly& d);
bool divides(const Poly& d, const Poly& p);

/// Monic gcd.
Poly gcd(const Poly& a, const Poly& b);

/// u with a*u = 1 mod m and deg u < deg m; nullopt when gcd(a, m) != 1.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& m);

/// Yun's square-free decomposition: p = lc * prod_i factors[i]^(i+1), each
/// factor monic and square-free (possibly 1).
std::vector<Poly> square_free_factors(const Poly& p);

/// Taylor coefficients c_0..c_{count-1} of num/den; den(0) must be nonzero.
std::vector<GaussianRational> series_coefficients(const Poly& num, const Poly& den, int count);

/// Coefficients as complex<double>, ascending.
std::vector<std::complex<double>> to_complex(const Poly& p);

}  // namespace toeplitz
