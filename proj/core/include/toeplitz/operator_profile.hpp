#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toeplitz/rational_function.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz {

/// T_{z^shift} * multiplier * Q_cut * (inner H^p) + span(finite_span).
/// Q_k is the identity for k <= 0.
struct SpaceDescriptor {
  int shift = 0;
  ShiftedSymbol multiplier{0, Poly::one(), Poly::one()};
  int tail_projection_cut = 0;
  Poly inner_factor = Poly::one();
  std::vector<RationalFunction> finite_span;

  std::string to_string(const std::string& space = "H^p") const;
};

struct OperatorProfile {
  double p_label = 2.0;
  /// False for GeneralRat forward profiles: only the flags are filled.
  bool complete = true;
  /// False when a circle split is numeric; kernel_dim is still exact.
  bool kernel_basis_exact = true;
  std::vector<RationalFunction> kernel_basis;
  std::optional<int> kernel_dim;
  SpaceDescriptor domain;
  SpaceDescriptor range;
  std::optional<int> range_complement_dim;
  bool closed_range = false;
  bool dense_range = false;
  bool injective = false;
  bool fredholm = false;
  std::optional<int> index;
};

using AdjointProfile = OperatorProfile;

/// Forward profile. Full data needs a RatT symbol; for GeneralRat only the
/// flags are computed.
OperatorProfile profile(const RationalSymbol& omega, double p = 2.0);

/// Profile of T_omega^* on H^{p'}, 1/p + 1/p' = 1.
AdjointProfile adjoint_profile(const RationalSymbol& omega, double p = 2.0);

/// r together with witnesses r1, r2 for the defining relation of P~ or P~*.
struct TildeElement {
  Poly r;
  Poly r1;
  Poly r2;
};

/// Echelonized basis of P~ = {r : r q = r1 s + r2, deg r1, r2 < m} with
/// deg r < n. Needs a RatT symbol.
std::vector<TildeElement> tilde_p_basis(const RationalSymbol& omega);
/// Same for P~* of T_{omega*}: r q# = z^{m-n} r1 s# + r2 (m >= n) or
/// r q# = r1 s# + r2 (m < n).
std::vector<TildeElement> tilde_p_star_basis(const RationalSymbol& omega);

enum class Side { Forward, Adjoint };

/// f must be analytic on the closed disk (PolesInClosedDisk otherwise).
bool dom_contains(const RationalSymbol& omega, const RationalFunction& f, Side side);

/// f = q h + r with deg r < m and h analytic on the closed disk.
struct DomainSplit {
  RationalFunction h;
  Poly r;
};

/// Decomposition of an analytic f along Dom(T_omega) = q H^p + P_{m-1}.
DomainSplit split_domain(const RationalSymbol& omega, const RationalFunction& f);

}  // namespace toeplitz
