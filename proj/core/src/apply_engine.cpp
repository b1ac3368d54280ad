#include "toeplitz/apply_engine.hpp"

#include <algorithm>

#include "toeplitz/errors.hpp"

namespace toeplitz {

namespace {

void require_ratt(const RationalSymbol& omega, const char* what) {
  ensure(omega.is_ratt(), ErrorCode::NotRatT, std::string(what) + " needs all poles on the unit circle");
}

void require_analytic(const RationalFunction& f) {
  ensure(f.analytic_on_closed_disk(), ErrorCode::PolesInClosedDisk,
         "function has poles in the closed unit disk: " + f.to_string());
}

void require_dom(const RationalSymbol& omega, const DomElement& f) {
  require_analytic(f.h);
  ensure(f.r.is_zero() || f.r.deg() < omega.m(), ErrorCode::DegreeTooLarge,
         "polynomial part of a domain element must have degree < m");
}

// T_z^* on polynomials.
Poly backward(const Poly& p) {
  if (p.is_zero()) return {};
  return (p - Poly::constant(p.coeff(0))).shifted(-1);
}

// Companion matrix of the recurrence f_k = sum_j a_j f_{k-j} carried by den.
Matrix recurrence_matrix(const Poly& den) {
  const int d = den.deg();
  Matrix a(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  const GaussianRational inv0 = GaussianRational(1) / den[0];
  for (int j = 1; j <= d; ++j) a(0, j - 1) = -den[j] * inv0;
  for (int i = 1; i < d; ++i) a(i, i - 1) = 1;
  return a;
}

}  // namespace

RationalFunction DomElement::value(const RationalSymbol& omega) const {
  return omega.q() * h + RationalFunction::polynomial(r);
}

RationalFunction apply_forward(const RationalSymbol& omega, const DomElement& f) {
  require_ratt(omega, "apply_forward");
  require_dom(omega, f);
  const Poly r_tilde = divrem(f.r * omega.s(), omega.q()).quotient;
  return omega.s() * f.h + RationalFunction::polynomial(r_tilde);
}

RationalFunction analytic_part(const Poly& numer, const Poly& closed_part, const Poly& outside_part) {
  ensure(!closed_part.is_zero() && !outside_part.is_zero(), ErrorCode::ZeroPolynomial, "zero denominator factor");
  if (closed_part.deg() == 0) return {numer * (GaussianRational(1) / closed_part[0]), outside_part};
  // numer = x * closed + y * outside with deg y < deg closed; the y/closed
  // term has all its poles in the closed disk and is discarded
  const auto inv = inverse_mod(outside_part, closed_part);
  ensure(inv.has_value(), ErrorCode::InternalInconsistency, "closed-disk and outside factors share a root");
  const Poly y = divrem(numer * *inv, closed_part).remainder;
  return {exact_div(numer - y * outside_part, closed_part), outside_part};
}

Poly adjoint_domain_generator(const RationalSymbol& omega) {
  if (omega.is_ratt()) return sharp(omega.q());
  const auto& qs = omega.q_split();
  ensure(qs.exact, ErrorCode::InexactFactorization, "circle split of q is not over Q(i)");
  return sharp(qs.unit * qs.part_on);
}

RationalFunction apply_adjoint(const RationalSymbol& omega, const RationalFunction& v) {
  require_analytic(v);
  const int shift = omega.m() - omega.n();
  if (omega.is_ratt()) {
    const RationalFunction sv = sharp(omega.s()) * v;
    if (shift >= 0) return {sv.numer().shifted(shift), sv.denom()};
    const int drop = -shift;
    const Poly head(sv.taylor(drop));
    return {(sv.numer() - head * sv.denom()).shifted(-drop), sv.denom()};
  }
  // g = (u q_0)# v, and T^* g is the analytic part of z^{m-n} s# v / ((q_-)# (q_+)#)
  const auto& qs = omega.q_split();
  ensure(qs.exact, ErrorCode::InexactFactorization, "circle split of q is not over Q(i)");
  const Poly numer = (sharp(omega.s()) * v.numer()).shifted(std::max(shift, 0));
  const Poly closed = sharp(qs.part_outside).shifted(std::max(-shift, 0));
  const Poly outside = sharp(qs.part_inside) * v.denom();
  return analytic_part(numer, closed, outside);
}

GaussianRational hardy_pairing(const RationalFunction& f, const RationalFunction& g) {
  require_analytic(f);
  require_analytic(g);
  if (f.is_zero() || g.is_zero()) return 0;

  auto finite = [](const Poly& p, const RationalFunction& other, bool p_first) {
    const auto t = other.taylor(static_cast<int>(p.size()));
    GaussianRational acc = 0;
    for (std::size_t k = 0; k < p.size(); ++k) acc += p_first ? p[k] * t[k].conj() : t[k] * p[k].conj();
    return acc;
  };
  if (f.is_polynomial()) return finite(f.numer(), g, true);
  if (g.is_polynomial()) return finite(g.numer(), f, false);

  const int df = f.denom().deg();
  const int dg = g.denom().deg();
  const int kf = std::max(f.numer().deg() + 1, df);
  const int kg = std::max(g.numer().deg() + 1, dg);
  const int big_k = std::max(kf, kg);
  const auto ft = f.taylor(big_k + 1);
  const auto gt = g.taylor(big_k + 1);

  GaussianRational head = 0;
  for (int k = 0; k < big_k; ++k) head += ft[k] * gt[k].conj();

  // tail: sum_j e1' A^j x (e1' B^j y)^*, i.e. X(0,0) with X - A X B^* = x y^*
  const Matrix a = recurrence_matrix(f.denom());
  const Matrix b = recurrence_matrix(g.denom());
  std::vector<GaussianRational> x(static_cast<std::size_t>(df));
  std::vector<GaussianRational> y(static_cast<std::size_t>(dg));
  for (int i = 0; i < df; ++i) x[i] = ft[big_k - i];
  for (int i = 0; i < dg; ++i) y[i] = gt[big_k - i];

  const auto n = static_cast<std::size_t>(df * dg);
  Matrix sys(n, n);
  std::vector<GaussianRational> rhs(n);
  // vec is column-major: index i + df*j holds X(i, j)
  for (int j = 0; j < dg; ++j) {
    for (int i = 0; i < df; ++i) {
      const std::size_t row = static_cast<std::size_t>(i + df * j);
      rhs[row] = x[i] * y[j].conj();
      sys(row, row) += 1;
      for (int l = 0; l < dg; ++l) {
        const GaussianRational bjl = b(j, l).conj();
        if (bjl.is_zero()) continue;
        for (int k = 0; k < df; ++k) {
          if (a(i, k).is_zero()) continue;
          sys(row, static_cast<std::size_t>(k + df * l)) -= bjl * a(i, k);
        }
      }
    }
  }
  const auto sol = solve(sys, rhs);
  ensure(sol.has_value(), ErrorCode::InternalInconsistency, "Stein equation for the pairing is singular");
  return head + (*sol)[0];
}

GaussianRational adjoint_identity_check(const RationalSymbol& omega, const DomElement& f,
                                        const RationalFunction& v) {
  const RationalFunction tf = apply_forward(omega, f);
  const RationalFunction g = adjoint_domain_generator(omega) * v;
  const RationalFunction tstar = apply_adjoint(omega, v);
  return hardy_pairing(tf, g) - hardy_pairing(f.value(omega), tstar);
}

Matrix toeplitz_compression(const Poly& phi, int k) {
  return Matrix::toeplitz_compression(phi, static_cast<std::size_t>(std::max(k, 0)));
}

Poly compression_solve(const RationalSymbol& omega, const Poly& r1) {
  require_ratt(omega, "compression_solve");
  ensure(omega.is_proper(), ErrorCode::NotProper, "compression_solve needs m >= n");
  const int m = omega.m();
  ensure(r1.is_zero() || r1.deg() < m, ErrorCode::DegreeTooLarge, "r1 must have degree < m");
  if (m == 0) return {};
  const Matrix ts = toeplitz_compression(sharp(omega.s()), m).adjoint();
  const Matrix tz = toeplitz_compression(Poly::monomial(1, m - omega.n()), m).adjoint();
  const Matrix tq = toeplitz_compression(sharp(omega.q()), m).adjoint();
  std::vector<GaussianRational> rv(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) rv[k] = r1.coeff(k);
  const auto sol = solve(tq, (ts * tz).apply(rv));
  ensure(sol.has_value(), ErrorCode::InternalInconsistency, "compression of q# is singular although q(0) != 0");
  return Poly(*sol);
}

SzegoCertificate szego_eigen(const RationalSymbol& omega, const GaussianRational& lambda) {
  require_ratt(omega, "szego_eigen");
  ensure(omega.is_proper(), ErrorCode::NotProper, "Szego eigenrelation needs m >= n");
  ensure(lambda.norm() < 1, ErrorCode::LambdaNotInDisk, "lambda must satisfy |lambda| < 1");
  const int shift = omega.m() - omega.n();
  GaussianRational lpow = 1;
  for (int k = 0; k < shift; ++k) lpow *= lambda;
  const GaussianRational star = lpow * sharp(omega.s()).eval(lambda) / sharp(omega.q()).eval(lambda);
  SzegoCertificate out{star.conj(), {}};
  const Poly kernel{1, -lambda.conj()};
  out.r = exact_div(omega.q() * out.c - omega.s(), kernel);
  ensure(out.r.is_zero() || out.r.deg() < omega.m(), ErrorCode::IdentityFailure,
         "Szego certificate has degree >= m");
  ensure(omega.s() + kernel * out.r == omega.q() * out.c, ErrorCode::IdentityFailure,
         "Szego certificate identity fails");
  return out;
}

SarasonProbe sarason_axioms_probe(const RationalSymbol& omega, const DomElement& f) {
  require_ratt(omega, "sarason_axioms_probe");
  require_dom(omega, f);
  const Poly& q = omega.q();
  const int m = omega.m();
  const RationalFunction fv = f.value(omega);
  const RationalFunction zf = Poly::z() * fv;
  SarasonProbe out;

  const DivRem zr = divrem(f.r.shifted(1), q);
  out.shifted = {Poly::z() * f.h + RationalFunction::polynomial(zr.quotient), zr.remainder};
  out.axiom1 = (zr.remainder.is_zero() || zr.remainder.deg() < m) && out.shifted.h.analytic_on_closed_disk() &&
               out.shifted.value(omega) == zf;

  out.axiom2 = out.axiom1 && apply_forward(omega, out.shifted).backward_shift() == apply_forward(omega, f);

  out.axiom3_applicable = fv.value_at_zero().is_zero();
  const GaussianRational h0 = f.h.value_at_zero();
  out.backward = {f.h.backward_shift(), h0 * backward(q) + backward(f.r)};
  out.axiom3 = (out.backward.r.is_zero() || out.backward.r.deg() < m) &&
               out.backward.h.analytic_on_closed_disk() && out.backward.value(omega) == fv.backward_shift();
  return out;
}

bool in_multiple_space(const RationalFunction& f, const Poly& phi) {
  require_analytic(f);
  ensure(!phi.is_zero(), ErrorCode::ZeroPolynomial, "multiplier is zero");
  return RationalFunction(f.numer(), f.denom() * phi).analytic_on_closed_disk();
}

}  // namespace toeplitz
