#pragma once

#include <optional>

#include "toeplitz/linalg.hpp"
#include "toeplitz/operator_profile.hpp"
#include "toeplitz/rational_function.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz {

/// f = q h + r in Dom(T_omega), with h analytic on the closed disk and
/// deg r < m.
struct DomElement {
  RationalFunction h;
  Poly r;

  RationalFunction value(const RationalSymbol& omega) const;
};

/// T_omega f = s h + r~, where r s = r~ q + r2 and deg r2 < m.
RationalFunction apply_forward(const RationalSymbol& omega, const DomElement& f);

/// The part of numer / (closed_part * outside_part) with poles outside the
/// closed disk: the Riesz projection after dropping the strictly proper
/// closed-disk terms. The two factors must be coprime.
RationalFunction analytic_part(const Poly& numer, const Poly& closed_part, const Poly& outside_part);

/// (u q_0)# where q = u q_- q_0 q_+; equals q# for RatT symbols.
Poly adjoint_domain_generator(const RationalSymbol& omega);

/// T_omega^* g for g = adjoint_domain_generator(omega) * v. For RatT this is
/// T_{z^{m-n}} (s# v); in general the analytic part of omega* g.
RationalFunction apply_adjoint(const RationalSymbol& omega, const RationalFunction& v);

/// sum_k f_k conj(g_k) for f, g analytic on the closed disk, exact.
GaussianRational hardy_pairing(const RationalFunction& f, const RationalFunction& g);

/// <T f, q# v> - <f, T^*(q# v)>; exactly zero by the adjoint relation.
GaussianRational adjoint_identity_check(const RationalSymbol& omega, const DomElement& f,
                                        const RationalFunction& v);

/// k x k section of T_phi for analytic phi (lower triangular).
Matrix toeplitz_compression(const Poly& phi, int k);

/// Solves T*_{s#,m} T*_{z^{m-n},m} r1 = T*_{q#,m} r for r. Proper RatT only.
Poly compression_solve(const RationalSymbol& omega, const Poly& r1);

struct SzegoCertificate {
  GaussianRational c;  // conj(omega*(lambda))
  Poly r;              // s + (1 - conj(lambda) z) r = q c, deg r < m
};

SzegoCertificate szego_eigen(const RationalSymbol& omega, const GaussianRational& lambda);

struct SarasonProbe {
  bool axiom1 = false;  // z f in Dom(T)
  bool axiom2 = false;  // T_z^* T T_z f = T f
  bool axiom3_applicable = false;  // f(0) = 0
  bool axiom3 = false;  // T_z^* f in Dom(T)
  DomElement shifted;   // decomposition of z f
  DomElement backward;  // decomposition of T_z^* f
};

SarasonProbe sarason_axioms_probe(const RationalSymbol& omega, const DomElement& f);

/// f in phi H^2 for f analytic on the closed disk, decided exactly.
bool in_multiple_space(const RationalFunction& f, const Poly& phi);

}  // namespace toeplitz
