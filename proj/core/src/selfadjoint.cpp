#include "toeplitz/selfadjoint.hpp"

#include <algorithm>

#include "toeplitz/errors.hpp"

namespace toeplitz {

SelfAdjointReport analyze(const RationalSymbol& omega) {
  ensure(omega.is_ratt(), ErrorCode::NotRatT, "selfadjoint analysis needs all poles on the unit circle");
  SelfAdjointReport rep;
  rep.omega_at_zero = *omega.eval(GaussianRational(0));
  const auto witness = real_on_circle(omega);
  rep.symmetric = witness.has_value();
  if (!rep.symmetric) return rep;
  rep.gamma = witness->gamma;
  rep.image = circle_image_classify(omega);

  auto check = [&rep](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const Poly& s = omega.s();
  const Poly& q = omega.q();
  const int m = omega.m();
  const int n = omega.n();
  const GaussianRational i = GaussianRational::i();
  const Poly plus = s + i * q;
  const Poly minus = s - i * q;
  const RootCounts cp = count_roots(plus);
  const RootCounts cm = count_roots(minus);

  rep.l_plus = m - plus.deg();
  rep.l_minus = m - minus.deg();
  rep.k_plus_in = cp.inside;
  rep.k_plus_out = cp.outside;
  rep.k_minus_in = cm.inside;
  rep.k_minus_out = cm.outside;
  rep.closed_disk_s_minus_iq = cm.closed_disk();
  rep.closed_disk_s_plus_iq = cp.closed_disk();
  rep.n_plus = std::max(0, m - cm.closed_disk());
  rep.n_minus = std::max(0, m - cp.closed_disk());
  rep.extension_exists = rep.k_plus_in == rep.k_minus_in;

  check("no circle roots of s +- iq", cp.on_circle == 0 && cm.on_circle == 0);
  check("open disk count = closed disk count", cp.inside == cp.closed_disk() && cm.inside == cm.closed_disk());
  check("deficiency indices agree with verdict", (rep.n_plus == rep.n_minus) == *rep.extension_exists);
  check("s + iq = gamma z^{l-} (s - iq)#", plus == *rep.gamma * sharp(minus).shifted(rep.l_minus));
  check("s - iq = gamma z^{l+} (s + iq)#", minus == *rep.gamma * sharp(plus).shifted(rep.l_plus));
  check("k+in = l- + k-out", rep.k_plus_in == rep.l_minus + rep.k_minus_out);
  check("k-in = l+ + k+out", rep.k_minus_in == rep.l_plus + rep.k_plus_out);
  check("only one of l+, l- nonzero", rep.l_plus == 0 || rep.l_minus == 0);
  check("n <= m <= 2n", n <= m && m <= 2 * n);
  check("extension implies deg q even", !*rep.extension_exists || m % 2 == 0);
  if (m >= 1) check("s + iq or s - iq has a root in D", rep.k_plus_in + rep.k_minus_in >= 1);
  if (rep.image == ImageClass::RealProperSubset)
    check("omega(T) != R implies extension", *rep.extension_exists);

  for (const auto& c : rep.checks) {
    ensure(c.passed, ErrorCode::InternalInconsistency, "selfadjoint check failed: " + c.name);
  }
  return rep;
}

RationalSymbol helson_symbol(int k) {
  ensure(k >= 1, ErrorCode::DegreeTooLarge, "Helson family needs k >= 1");
  GaussianRational c = 1;
  for (int j = 0; j < k; ++j) c *= -GaussianRational::i();
  return make_symbol(c * pow(Poly{1, 1}, k), pow(Poly{-1, 1}, k));
}

SelfAdjointReport helson_family(int k) { return analyze(helson_symbol(k)); }

}  // namespace toeplitz
