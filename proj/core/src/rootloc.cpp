#include "toeplitz/rootloc.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "toeplitz/errors.hpp"

namespace toeplitz {

RootCounts operator+(const RootCounts& a, const RootCounts& b) {
  return {a.inside + b.inside, a.on_circle + b.on_circle, a.outside + b.outside};
}

namespace {

int sign_of(const mpq_class& q) { return sgn(q); }

Poly real_part(const Poly& p) {
  std::vector<GaussianRational> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c.re());
  return Poly(std::move(v));
}

Poly imag_part(const Poly& p) {
  std::vector<GaussianRational> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c.im());
  return Poly(std::move(v));
}

// Signed remainder sequence P, Q, -rem(P, Q), ...
std::vector<Poly> signed_remainder_sequence(const Poly& p, const Poly& q) {
  std::vector<Poly> seq{p};
  if (q.is_zero()) return seq;
  seq.push_back(q);
  while (true) {
    const Poly r = -divrem(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(r);
  }
  return seq;
}

// Sign variations at +infinity (at_plus) or -infinity.
int variations_at_infinity(const std::vector<Poly>& seq, bool at_plus) {
  int prev = 0;
  int count = 0;
  for (const auto& f : seq) {
    if (f.is_zero()) continue;
    int s = sign_of(f.leading().re());
    if (!at_plus && (f.deg() % 2 == 1)) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int distinct_real_roots(const Poly& square_free) {
  if (square_free.deg() == 0) return 0;
  const auto seq = signed_remainder_sequence(square_free, square_free.derivative());
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

// Circle roots of a self-inversive d with d(0) != 0.
int circle_count_self_inversive(const Poly& d) {
  const Poly transformed = cayley_transform(d);
  const int at_minus_one = d.deg() - transformed.deg();
  const Poly a = real_part(transformed);
  const Poly b = imag_part(transformed);
  if (!a.is_zero() && !b.is_zero() && a * b.leading() != b * a.leading()) {
    fail(ErrorCode::InternalInconsistency, "Cayley image of a self-inversive polynomial is not a real multiple");
  }
  const Poly& real_poly = a.is_zero() ? b : a;
  return at_minus_one + count_real_roots(real_poly);
}

// Roots in the open disk of f, where f(0) != 0 and f has no circle roots.
int schur_cohn_inside(Poly f) {
  int offset = 0;
  int sign = 1;
  while (f.deg() > 0) {
    const int k = f.deg();
    const GaussianRational a0 = f.coeff(0);
    const GaussianRational ak = f.leading();
    const mpq_class delta = a0.norm() - ak.norm();
    if (sgn(delta) == 0) {
      // Degenerate step; finish this polynomial by the half-plane count.
      return offset + sign * count_upper_half_plane(cayley_transform(f));
    }
    Poly next = a0.conj() * f - ak * sharp_formal(f, k);
    if (sgn(delta) < 0) {
      // inside(f) = k - inside(next)
      offset += sign * k;
      sign = -sign;
    }
    f = std::move(next);
  }
  return offset;
}

std::optional<mpq_class> rationalize(double x) {
  if (!std::isfinite(x)) return std::nullopt;
  const double tol = 1e-9 * std::max(1.0, std::abs(x));
  // Continued-fraction convergents.
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e12) break;
    const long long ai = static_cast<long long>(a);
    const long long h2 = ai * h1 + h0;
    const long long k2 = ai * k1 + k0;
    if (k2 > 1000000000LL) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    const double approx = static_cast<double>(h1) / static_cast<double>(k1);
    if (std::abs(approx - x) <= tol) {
      mpq_class q(static_cast<long>(h1), static_cast<unsigned long>(k1));
      q.canonicalize();
      return q;
    }
    const double frac = r - a;
    if (frac == 0.0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<Poly> rationalize(const ComplexPoly& p) {
  std::vector<GaussianRational> v;
  for (const auto& c : p) {
    auto re = rationalize(c.real());
    auto im = rationalize(c.imag());
    if (!re || !im) return std::nullopt;
    v.emplace_back(*re, *im);
  }
  return Poly(std::move(v));
}

// Exact monic factor with the given numeric roots: first by rationalizing
// each root, then by rationalizing the expanded coefficients (which also
// catches irrational conjugate groups with rational products).
std::optional<Poly> exact_group(const std::vector<std::complex<double>>& roots) {
  Poly from_roots = Poly::one();
  bool ok = true;
  for (const auto& r : roots) {
    const auto re = rationalize(r.real());
    const auto im = rationalize(r.imag());
    if (!re || !im) {
      ok = false;
      break;
    }
    from_roots *= Poly{-GaussianRational(*re, *im), 1};
  }
  if (ok) return from_roots;
  return rationalize(poly_from_roots(roots));
}

}  // namespace

int count_real_roots(const Poly& real_poly) {
  if (real_poly.is_zero()) fail(ErrorCode::ZeroPolynomial, "real root count of zero polynomial");
  if (!real_poly.is_real()) fail(ErrorCode::NonRealCoefficients, "Sturm count needs real coefficients");
  const auto factors = square_free_factors(real_poly);
  int total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    total += static_cast<int>(i + 1) * distinct_real_roots(factors[i]);
  }
  return total;
}

Poly cayley_transform(const Poly& p) {
  if (p.is_zero()) return {};
  const int k = p.deg();
  const Poly plus{1, GaussianRational::i()};    // 1 + i t
  const Poly minus{1, -GaussianRational::i()};  // 1 - i t
  std::vector<Poly> plus_pow{Poly::one()}, minus_pow{Poly::one()};
  for (int j = 1; j <= k; ++j) {
    plus_pow.push_back(plus_pow.back() * plus);
    minus_pow.push_back(minus_pow.back() * minus);
  }
  Poly out;
  for (int j = 0; j <= k; ++j) {
    const auto& c = p[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    out += c * (plus_pow[static_cast<std::size_t>(j)] * minus_pow[static_cast<std::size_t>(k - j)]);
  }
  return out;
}

int count_upper_half_plane(const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "half-plane count of zero polynomial");
  const int k = p.deg();
  if (k == 0) return 0;
  const Poly a = real_part(p);
  const Poly b = imag_part(p);
  if (b.is_zero() || a.is_zero()) {
    // p is a scalar multiple of a real polynomial without real roots.
    return k / 2;
  }
  const auto seq = signed_remainder_sequence(b, a);
  const int index = variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
  int boundary = 0;
  if (a.deg() > b.deg()) {
    const int s_plus = sign_of(a.leading().re()) * sign_of(b.leading().re());
    const int s_minus = ((a.deg() - b.deg()) % 2 == 0) ? s_plus : -s_plus;
    boundary = (s_plus > 0 ? 0 : 1) - (s_minus > 0 ? 0 : 1);
  }
  const int twice = k + index + boundary;
  if (twice % 2 != 0 || twice < 0 || twice > 2 * k) {
    fail(ErrorCode::InternalInconsistency, "half-plane root count is not an integer in range");
  }
  return twice / 2;
}

RootCounts count_roots(const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "count_roots of zero polynomial");
  const int zeros = p.valuation();
  const Poly p0 = p.shifted(-zeros);
  if (p0.deg() == 0) return {zeros, 0, 0};

  const Poly d = gcd(p0, sharp(p0));
  int circle = 0;
  int paired = 0;
  if (d.deg() > 0) {
    circle = circle_count_self_inversive(d);
    if ((d.deg() - circle) % 2 != 0) fail(ErrorCode::InternalInconsistency, "self-inversive part has unpaired roots");
    paired = (d.deg() - circle) / 2;
  }
  const Poly e = exact_div(p0, d);
  const int e_inside = e.deg() > 0 ? schur_cohn_inside(e) : 0;
  if (e_inside < 0 || e_inside > e.deg()) fail(ErrorCode::InternalInconsistency, "Schur–Cohn count out of range");
  return {zeros + e_inside + paired, circle, e.deg() - e_inside + paired};
}

bool all_roots_in_closed_disk(const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "closed-disk test of zero polynomial");
  Poly f = p;
  while (f.deg() > 0) {
    const int k = f.deg();
    const GaussianRational a0 = f.coeff(0);
    const GaussianRational ak = f.leading();
    const int order = cmp(a0.norm(), ak.norm());
    if (order > 0) return false;
    if (order < 0) {
      f = (ak.conj() * f - a0 * sharp_formal(f, k)).shifted(-1);
      continue;
    }
    if (!self_inversive(f)) return false;
    f = f.derivative();
  }
  return true;
}

bool cohn_test(const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "cohn_test of zero polynomial");
  if (!self_inversive(p)) return false;
  return all_roots_in_closed_disk(p.derivative());
}

CircleFactorization factor_circle(const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "factor_circle of zero polynomial");
  CircleFactorization out;
  out.counts = count_roots(p);
  out.unit = p.leading();
  out.unit_numeric = out.unit.to_complex();

  const int zeros = p.valuation();
  const Poly p0 = p.shifted(-zeros);

  bool exact = true;
  Poly in_exact = Poly::monomial(1, zeros);
  Poly on_exact = Poly::one();
  Poly out_exact = Poly::one();
  out.roots_inside.assign(static_cast<std::size_t>(zeros), {0.0, 0.0});

  const auto factors = square_free_factors(p0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Poly& f = factors[i];
    if (f.deg() == 0) continue;
    const int mult = static_cast<int>(i + 1);
    const auto roots = polynomial_roots(to_complex(f));
    std::vector<std::complex<double>> in, on, outs;
    for (const auto& r : roots) {
      const double gap = std::abs(r) - 1.0;
      if (gap < -kCircleTolerance) {
        in.push_back(r);
      } else if (gap > kCircleTolerance) {
        outs.push_back(r);
      } else {
        on.push_back(r);
      }
    }
    for (int m = 0; m < mult; ++m) {
      out.roots_inside.insert(out.roots_inside.end(), in.begin(), in.end());
      out.roots_on.insert(out.roots_on.end(), on.begin(), on.end());
      out.roots_outside.insert(out.roots_outside.end(), outs.begin(), outs.end());
    }
    if (!exact) continue;
    auto g_in = exact_group(in);
    auto g_on = exact_group(on);
    auto g_out = exact_group(outs);
    bool hit = g_in && g_on && g_out && (*g_in) * (*g_on) * (*g_out) == f;
    if (!hit) {
      g_in = rationalize(poly_from_roots(in));
      g_on = rationalize(poly_from_roots(on));
      g_out = rationalize(poly_from_roots(outs));
      hit = g_in && g_on && g_out && (*g_in) * (*g_on) * (*g_out) == f;
    }
    if (hit) {
      in_exact *= pow(*g_in, mult);
      on_exact *= pow(*g_on, mult);
      out_exact *= pow(*g_out, mult);
    } else {
      exact = false;
    }
  }

  const RootCounts numeric{static_cast<int>(out.roots_inside.size()), static_cast<int>(out.roots_on.size()),
                           static_cast<int>(out.roots_outside.size())};
  if (numeric != out.counts) {
    fail(ErrorCode::InternalInconsistency, "numeric root classification disagrees with exact counts for " + p.to_string());
  }

  out.inside_numeric = poly_from_roots(out.roots_inside);
  out.on_numeric = poly_from_roots(out.roots_on);
  out.outside_numeric = poly_from_roots(out.roots_outside);

  if (exact) {
    out.exact = true;
    out.part_inside = in_exact;
    out.part_on = on_exact;
    out.part_outside = out_exact;
    if (out.unit * in_exact * on_exact * out_exact != p) {
      fail(ErrorCode::InternalInconsistency, "exact circle factorization does not reconstruct p");
    }
    // Replace the floating parts by the exact ones rounded once.
    out.inside_numeric = to_complex(in_exact);
    out.on_numeric = to_complex(on_exact);
    out.outside_numeric = to_complex(out_exact);
  } else {
    ComplexPoly rebuilt = multiply(multiply(out.inside_numeric, out.on_numeric), out.outside_numeric);
    double scale = 0;
    for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c.to_complex()));
    double err = 0;
    const auto target = to_complex(p);
    for (std::size_t k = 0; k < std::max(rebuilt.size(), target.size()); ++k) {
      const auto a = k < rebuilt.size() ? rebuilt[k] * out.unit_numeric : std::complex<double>{};
      const auto b = k < target.size() ? target[k] : std::complex<double>{};
      err = std::max(err, std::abs(a - b));
    }
    if (err > kFactorTolerance * std::max(1.0, scale)) {
      fail(ErrorCode::InternalInconsistency, "numeric circle factorization residual too large");
    }
  }
  return out;
}

}  // namespace toeplitz
