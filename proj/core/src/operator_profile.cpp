#include "toeplitz/operator_profile.hpp"

#include <algorithm>
#include <sstream>

#include "toeplitz/errors.hpp"
#include "toeplitz/linalg.hpp"

namespace toeplitz {

namespace {

bool is_trivial(const ShiftedSymbol& m) {
  return m.shift == 0 && m.numer == Poly::one() && m.denom == Poly::one();
}

std::vector<RationalFunction> monomials(int count, const Poly& numer_factor, const Poly& denom) {
  std::vector<RationalFunction> out;
  for (int j = 0; j < count; ++j) out.emplace_back(numer_factor.shifted(j), denom);
  return out;
}

// Solutions (r, r1) with deg r < n_r, deg r1 < n_r1 of: coefficients of
// degree >= cut in r*a - r1*b vanish. r2 collects the rest.
std::vector<TildeElement> tilde_space(const Poly& a, const Poly& b, int n_r, int n_r1, int cut) {
  if (n_r <= 0) return {};
  n_r1 = std::max(n_r1, 0);
  const int top = std::max(n_r - 1 + a.deg(), b.is_zero() || n_r1 == 0 ? -1 : n_r1 - 1 + b.deg());
  const int eqs = std::max(top - cut + 1, 0);
  const auto unknowns = static_cast<std::size_t>(n_r + n_r1);
  Matrix sys(static_cast<std::size_t>(eqs), unknowns);
  for (int e = 0; e < eqs; ++e) {
    const int d = cut + e;
    for (int i = 0; i < n_r; ++i) sys(e, i) = a.coeff(d - i);
    for (int j = 0; j < n_r1; ++j) sys(e, n_r + j) = -b.coeff(d - j);
  }
  std::vector<std::vector<GaussianRational>> null;
  if (eqs == 0) {
    for (std::size_t k = 0; k < unknowns; ++k) {
      std::vector<GaussianRational> v(unknowns);
      v[k] = 1;
      null.push_back(std::move(v));
    }
  } else {
    null = nullspace(sys);
  }
  if (null.empty()) return {};

  Matrix rows(null.size(), unknowns);
  for (std::size_t i = 0; i < null.size(); ++i)
    for (std::size_t k = 0; k < unknowns; ++k) rows(i, k) = null[i][k];
  const auto pivots = rref(rows);

  std::vector<TildeElement> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= static_cast<std::size_t>(n_r)) break;
    std::vector<GaussianRational> rc(static_cast<std::size_t>(n_r));
    std::vector<GaussianRational> r1c(static_cast<std::size_t>(n_r1));
    for (int k = 0; k < n_r; ++k) rc[k] = rows(i, k);
    for (int k = 0; k < n_r1; ++k) r1c[k] = rows(i, n_r + k);
    TildeElement el{Poly(std::move(rc)), Poly(std::move(r1c)), Poly{}};
    el.r2 = el.r * a - el.r1 * b;
    ensure(el.r2.is_zero() || el.r2.deg() < cut, ErrorCode::InternalInconsistency,
           "tilde-space witness has a remainder of too high degree");
    out.push_back(std::move(el));
  }
  return out;
}

void require_ratt(const RationalSymbol& omega, const char* what) {
  ensure(omega.is_ratt(), ErrorCode::NotRatT, std::string(what) + " needs all poles on the unit circle");
}

void require_analytic(const RationalFunction& f) {
  ensure(f.analytic_on_closed_disk(), ErrorCode::PolesInClosedDisk,
         "function has poles in the closed unit disk: " + f.to_string());
}

}  // namespace

std::string SpaceDescriptor::to_string(const std::string& space) const {
  std::ostringstream os;
  if (shift != 0) os << "T_{z^" << shift << "} ";
  if (!is_trivial(multiplier)) {
    os << "[";
    if (multiplier.shift != 0) os << "z^" << multiplier.shift << " ";
    os << "(" << multiplier.numer.to_string() << ")/(" << multiplier.denom.to_string() << ")] ";
  }
  if (tail_projection_cut > 0) os << "Q_" << tail_projection_cut << " ";
  if (inner_factor == Poly::one()) {
    os << space;
  } else {
    os << "(" << inner_factor.to_string() << ")" << space;
  }
  if (!finite_span.empty()) {
    os << " + span{";
    for (std::size_t i = 0; i < finite_span.size(); ++i) {
      if (i) os << ", ";
      os << finite_span[i].to_string();
    }
    os << "}";
  }
  return os.str();
}

std::vector<TildeElement> tilde_p_basis(const RationalSymbol& omega) {
  require_ratt(omega, "tilde_p_basis");
  return tilde_space(omega.q(), omega.s(), omega.n(), omega.m(), omega.m());
}

std::vector<TildeElement> tilde_p_star_basis(const RationalSymbol& omega) {
  require_ratt(omega, "tilde_p_star_basis");
  const int m = omega.m();
  const int n = omega.n();
  const Poly qs = sharp(omega.q());
  const Poly ss = sharp(omega.s());
  if (m >= n) return tilde_space(qs, ss.shifted(m - n), m - n + ss.deg(), m, m);
  return tilde_space(qs, ss, ss.deg(), m, m);
}

OperatorProfile profile(const RationalSymbol& omega, double p) {
  const auto& d = omega.degrees();
  OperatorProfile out;
  out.p_label = p;
  out.closed_range = d.n_zero == 0;
  out.fredholm = d.n_zero == 0;
  out.dense_range = d.n_minus <= d.m_minus + d.m_zero;

  if (!omega.is_ratt()) {
    out.complete = false;
    out.kernel_basis_exact = false;
    out.injective = d.m_minus + d.m_zero <= d.n_minus + d.n_zero;
    if (out.injective) out.kernel_dim = 0;
    if (out.dense_range) out.range_complement_dim = 0;
    return out;
  }

  const int kdim = std::max(0, d.m - d.n_minus - d.n_zero);
  out.kernel_dim = kdim;
  out.injective = kdim == 0;
  if (kdim > 0) {
    if (omega.s_split().exact) {
      out.kernel_basis = monomials(kdim, Poly::one(), omega.s_split().part_outside);
    } else {
      out.kernel_basis_exact = false;
    }
  }
  out.domain.inner_factor = omega.q();
  out.domain.finite_span = monomials(d.m, Poly::one(), Poly::one());
  out.range.inner_factor = omega.s();
  for (const auto& el : tilde_p_basis(omega)) out.range.finite_span.push_back(RationalFunction::polynomial(el.r));
  out.range_complement_dim = std::max(d.n_minus - d.m, 0);
  if (out.fredholm) out.index = d.m - d.n_minus;
  return out;
}

AdjointProfile adjoint_profile(const RationalSymbol& omega, double p) {
  const auto& d = omega.degrees();
  const auto& ss = omega.s_split();
  const auto& qs = omega.q_split();
  AdjointProfile out;
  out.p_label = p / (p - 1);
  out.closed_range = d.n_zero == 0;
  out.fredholm = d.n_zero == 0;
  out.dense_range = d.m_minus + d.m_zero <= d.n_minus + d.n_zero;

  const int kdim = std::max(0, d.n_minus - d.m_minus - d.m_zero);
  out.kernel_dim = kdim;
  out.injective = kdim == 0;

  if (omega.is_ratt()) {
    const int fwd_kernel = std::max(0, d.m - d.n_minus - d.n_zero);
    out.range_complement_dim = fwd_kernel;
    out.domain.inner_factor = sharp(omega.q());
    out.range.shift = d.m - d.n;
    out.range.inner_factor = sharp(omega.s());
    if (kdim > 0) {
      if (ss.exact) {
        out.kernel_basis = monomials(kdim, sharp(omega.q()), sharp(ss.part_inside));
      } else {
        out.kernel_basis_exact = false;
      }
    }
  } else {
    if (out.dense_range) out.range_complement_dim = 0;
    out.range.shift = d.m - d.n;
    out.range.tail_projection_cut = d.n_zero + d.n_minus - d.m_zero - d.m_minus;
    if (ss.exact && qs.exact) {
      out.domain.inner_factor = sharp(qs.unit * qs.part_on);
      out.range.multiplier = {0, sharp(ss.part_outside), sharp(qs.part_outside)};
      out.range.inner_factor = sharp(ss.part_on);
      if (kdim > 0)
        out.kernel_basis = monomials(kdim, sharp(qs.part_inside) * sharp(qs.part_on), sharp(ss.part_inside));
    } else {
      out.kernel_basis_exact = false;
    }
  }
  if (out.fredholm && out.range_complement_dim) out.index = kdim - *out.range_complement_dim;
  return out;
}

bool dom_contains(const RationalSymbol& omega, const RationalFunction& f, Side side) {
  require_analytic(f);
  if (side == Side::Forward) {
    // every function analytic on the closed disk splits as q h + r
    require_ratt(omega, "forward domain membership");
    return true;
  }
  Poly inner;
  if (omega.is_ratt()) {
    inner = sharp(omega.q());
  } else {
    ensure(omega.q_split().exact, ErrorCode::InexactFactorization, "circle part of q is not over Q(i)");
    inner = sharp(omega.q_split().part_on);  // units do not affect divisibility
  }
  // the denominator of f has no circle roots, so only the numerator can absorb inner
  return f.is_zero() || divides(inner, f.numer());
}

DomainSplit split_domain(const RationalSymbol& omega, const RationalFunction& f) {
  require_ratt(omega, "domain decomposition");
  require_analytic(f);
  const Poly& q = omega.q();
  const Poly& num = f.numer();
  const Poly& den = f.denom();
  const auto inv = inverse_mod(den, q);
  ensure(inv.has_value(), ErrorCode::InternalInconsistency, "denominator shares a root with q");
  const Poly r = divrem(num * *inv, q).remainder;
  const Poly h_num = exact_div(num - den * r, q);
  return {RationalFunction(h_num, den), r};
}

}  // namespace toeplitz
