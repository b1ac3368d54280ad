#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toeplitz/symbol.hpp"

namespace toeplitz {

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelfAdjointReport {
  bool symmetric = false;
  std::optional<GaussianRational> gamma;
  /// omega(0); q(0) != 0 for RatT symbols.
  GaussianRational omega_at_zero;
  int l_plus = 0, l_minus = 0;
  int k_plus_in = 0, k_plus_out = 0;
  int k_minus_in = 0, k_minus_out = 0;
  int n_plus = 0, n_minus = 0;
  /// Roots of s -+ iq in the closed disk, before taking max{0, m - .}.
  int closed_disk_s_minus_iq = 0, closed_disk_s_plus_iq = 0;
  std::optional<bool> extension_exists;
  ImageClass image = ImageClass::NotRealValued;
  std::vector<NamedCheck> checks;

  static constexpr const char* kPairing = "n_plus = dim Ker(T - i) <-> s - iq; n_minus <-> s + iq";
};

/// Symmetry of T_omega^*, deficiency indices and the extension verdict, with
/// the exact cross-checks. Throws InternalInconsistency if any check fails.
SelfAdjointReport analyze(const RationalSymbol& omega);

/// s = (-i)^k (z+1)^k, q = (z-1)^k.
RationalSymbol helson_symbol(int k);
SelfAdjointReport helson_family(int k);

}  // namespace toeplitz
