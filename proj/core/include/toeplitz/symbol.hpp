#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "toeplitz/poly.hpp"
#include "toeplitz/rational_function.hpp"
#include "toeplitz/rootloc.hpp"

namespace toeplitz {

enum class SymbolClass {
  RatT,        // all poles on the unit circle (including no poles at all)
  GeneralRat,
};

const char* to_string(SymbolClass c);

/// Common factor removed when the input pair was not coprime.
struct ReductionReport {
  bool reduced = false;
  Poly common_factor = Poly::one();
};

/// Root-location degrees of s and q.
struct SymbolDegrees {
  int m = 0;  // deg q
  int n = 0;  // deg s
  int m_minus = 0, m_zero = 0, m_plus = 0;
  int n_minus = 0, n_zero = 0, n_plus = 0;
};

/// omega = s/q with s, q coprime and q nonzero.
class RationalSymbol {
 public:
  const Poly& s() const { return s_; }
  const Poly& q() const { return q_; }
  const CircleFactorization& s_split() const { return s_split_; }
  const CircleFactorization& q_split() const { return q_split_; }
  const SymbolDegrees& degrees() const { return deg_; }
  int m() const { return deg_.m; }
  int n() const { return deg_.n; }
  SymbolClass symbol_class() const { return class_; }
  bool is_ratt() const { return class_ == SymbolClass::RatT; }
  bool is_proper() const { return deg_.n <= deg_.m; }
  bool splits_exact() const { return s_split_.exact && q_split_.exact; }
  const ReductionReport& reduction() const { return reduction_; }

  std::complex<double> eval(std::complex<double> z) const { return s_.eval(z) / q_.eval(z); }
  /// omega(z) exactly, or nullopt at a pole.
  std::optional<GaussianRational> eval(const GaussianRational& z) const;

  RationalFunction as_function() const { return {s_, q_}; }

  friend RationalSymbol make_symbol(const Poly& s_in, const Poly& q_in);

 private:
  RationalSymbol() = default;
  Poly s_;
  Poly q_;
  CircleFactorization s_split_;
  CircleFactorization q_split_;
  SymbolDegrees deg_;
  SymbolClass class_ = SymbolClass::GeneralRat;
  ReductionReport reduction_;
};

/// Reduces (s_in, q_in) to coprime form and computes both circle splits.
RationalSymbol make_symbol(const Poly& s_in, const Poly& q_in);

/// z^shift * numer / denom, shift possibly negative.
struct ShiftedSymbol {
  int shift = 0;
  Poly numer;
  Poly denom;

  std::complex<double> eval(std::complex<double> z) const;
  /// Clears the shift into numerator or denominator.
  RationalFunction as_function() const;
  /// Same, as a reduced symbol.
  RationalSymbol flatten() const;
};

/// z^{m-n} s# / q#.
ShiftedSymbol omega_star(const RationalSymbol& omega);

/// omega = omega_minus * (z^kappa omega_zero) * omega_plus.
struct WienerHopfSplit {
  int kappa = 0;
  ShiftedSymbol minus;        // s_- / (z^kappa q_-)
  RationalFunction zero;      // s_0 / q_0
  RationalFunction plus;      // unit * s_+ / q_+
};

/// Needs exact circle splits of s and q (InexactFactorization otherwise).
WienerHopfSplit wiener_hopf_split(const RationalSymbol& omega);

struct SymmetryWitness {
  GaussianRational gamma;  // q = gamma q#
  Poly s_tilde;            // s = z^{m-n} s_tilde
};

/// Present iff omega is real on the circle. Decided by the proper /
/// self-inversive / leading-coefficient conditions and cross-checked against
/// the cross-multiplied identity omega* = omega.
std::optional<SymmetryWitness> real_on_circle(const RationalSymbol& omega);

/// The omega* = omega route on its own: z^{m-n} s# q == s q# (cleared).
bool conjugate_symmetric(const RationalSymbol& omega);

/// Condition-(5) algebra on its own (no cross-check).
std::optional<SymmetryWitness> symmetry_by_coefficients(const RationalSymbol& omega);

/// omega(z) = s_real(w)/q_real(w) with w = -i(z+1)/(z-1).
/// When check_real_roots is set, q_real's roots must be real (numerically).
RationalSymbol cayley_compose(const Poly& s_real, const Poly& q_real, bool check_real_roots = true);

enum class ImageClass { NotRealValued, RealProperSubset, RealFullLine };
const char* to_string(ImageClass c);

inline constexpr int kSamplesPerArc = 512;

/// Sampling-based classification of omega(T). Advisory only.
ImageClass circle_image_classify(const RationalSymbol& omega);

struct CurveSample {
  double theta;
  std::complex<double> value;
  bool at_pole;
};

/// omega(e^{i theta}) on an equispaced grid.
std::vector<CurveSample> sample_curve(const RationalSymbol& omega, int count);

}  // namespace toeplitz
