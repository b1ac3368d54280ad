#include "report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "toeplitz/literal.hpp"

namespace toeplitz::cli {

namespace {

std::string format_double(double x) {
  if (x == 0) return "0";
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string format_p(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << std::setprecision(12) << p;
  return os.str();
}

Json space_json(const SpaceDescriptor& d, const std::string& space, const EmitOptions& opt) {
  Json j;
  j["text"] = d.to_string(space);
  j["shift"] = d.shift;
  j["multiplier"] = {{"shift", d.multiplier.shift},
                     {"numer", to_json(d.multiplier.numer)},
                     {"denom", to_json(d.multiplier.denom)}};
  j["tail_projection_cut"] = d.tail_projection_cut;
  j["inner_factor"] = to_json(d.inner_factor);
  Json span = Json::array();
  for (const auto& f : d.finite_span) span.push_back(to_json(f, opt));
  j["finite_span"] = span;
  return j;
}

Json split_json(const CircleFactorization& f, const EmitOptions& opt) {
  Json j;
  j["exact"] = f.exact;
  j["counts"] = {{"inside", f.counts.inside}, {"on_circle", f.counts.on_circle}, {"outside", f.counts.outside}};
  if (f.exact) {
    j["unit"] = to_json(f.unit);
    j["inside"] = to_json(f.part_inside);
    j["on_circle"] = to_json(f.part_on);
    j["outside"] = to_json(f.part_outside);
  }
  if (opt.numeric || !f.exact) {
    auto roots = [](const std::vector<std::complex<double>>& rs) {
      Json a = Json::array();
      for (auto r : rs) a.push_back(to_json(r));
      return a;
    };
    j["roots_inside"] = roots(f.roots_inside);
    j["roots_on_circle"] = roots(f.roots_on);
    j["roots_outside"] = roots(f.roots_outside);
  }
  return j;
}

void emit_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    os << pad << it.key() << ":";
    if (v.is_object()) {
      os << "\n";
      emit_text(os, v, indent + 1);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << "\n";
      for (const auto& e : v) {
        os << pad << "  -";
        bool first = true;
        for (auto f = e.begin(); f != e.end(); ++f) {
          os << (first ? " " : ", ") << f.key() << "=" << (f.value().is_string() ? f.value().get<std::string>() : f.value().dump());
          first = false;
        }
        os << "\n";
      }
    } else if (v.is_string()) {
      os << " " << v.get<std::string>() << "\n";
    } else {
      os << " " << v.dump() << "\n";
    }
  }
}

}  // namespace

Json to_json(const GaussianRational& c) { return c.to_string(); }

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.to_string());
  return a;
}

Json to_json(std::complex<double> c) { return Json::array({format_double(c.real()), format_double(c.imag())}); }

Json to_json(const ComplexPoly& p) {
  Json a = Json::array();
  for (auto c : p) a.push_back(to_json(c));
  return a;
}

Json to_json(const RationalFunction& f, const EmitOptions& opt) {
  Json j;
  j["numer"] = to_json(f.numer());
  j["denom"] = to_json(f.denom());
  j["text"] = f.to_string();
  if (opt.numeric) {
    j["numer_numeric"] = to_json(toeplitz::to_complex(f.numer()));
    j["denom_numeric"] = to_json(toeplitz::to_complex(f.denom()));
  }
  return j;
}

std::string primal_space(double p) { return "H^" + format_p(p); }

std::string dual_space(double p) {
  if (std::isinf(p)) return "H^1";
  const double dual = p == 1 ? INFINITY : p / (p - 1);
  return "H^" + format_p(dual);
}

Json symbol_json(const RationalSymbol& omega, const EmitOptions& opt) {
  Json j;
  j["s"] = to_json(omega.s());
  j["q"] = to_json(omega.q());
  j["text"] = "(" + omega.s().to_string() + ")/(" + omega.q().to_string() + ")";
  j["class"] = to_string(omega.symbol_class());
  j["proper"] = omega.is_proper();
  j["reduced"] = omega.reduction().reduced;
  if (omega.reduction().reduced) j["common_factor"] = to_json(omega.reduction().common_factor);
  const auto& d = omega.degrees();
  j["degrees"] = {{"m", d.m},           {"n", d.n},         {"m_minus", d.m_minus}, {"m_zero", d.m_zero},
                  {"m_plus", d.m_plus}, {"n_minus", d.n_minus}, {"n_zero", d.n_zero},   {"n_plus", d.n_plus}};
  j["s_split"] = split_json(omega.s_split(), opt);
  j["q_split"] = split_json(omega.q_split(), opt);
  return j;
}

Json profile_json(const OperatorProfile& prof, const std::string& space, const EmitOptions& opt) {
  Json j;
  j["p"] = format_p(prof.p_label);
  j["complete"] = prof.complete;
  j["kernel_dim"] = prof.kernel_dim ? Json(*prof.kernel_dim) : Json(nullptr);
  j["kernel_basis_exact"] = prof.kernel_basis_exact;
  Json basis = Json::array();
  for (const auto& f : prof.kernel_basis) basis.push_back(to_json(f, opt));
  j["kernel_basis"] = basis;
  j["domain"] = space_json(prof.domain, space, opt);
  j["range"] = space_json(prof.range, space, opt);
  j["range_complement_dim"] = prof.range_complement_dim ? Json(*prof.range_complement_dim) : Json(nullptr);
  j["closed_range"] = prof.closed_range;
  j["dense_range"] = prof.dense_range;
  j["injective"] = prof.injective;
  j["fredholm"] = prof.fredholm;
  j["index"] = prof.index ? Json(*prof.index) : Json(nullptr);
  return j;
}

Json selfadjoint_json(const SelfAdjointReport& rep) {
  Json j;
  j["symmetric"] = rep.symmetric;
  j["gamma"] = rep.gamma ? to_json(*rep.gamma) : Json(nullptr);
  j["omega_at_zero"] = to_json(rep.omega_at_zero);
  if (rep.symmetric) {
    j["l_plus"] = rep.l_plus;
    j["l_minus"] = rep.l_minus;
    j["k_plus_in"] = rep.k_plus_in;
    j["k_plus_out"] = rep.k_plus_out;
    j["k_minus_in"] = rep.k_minus_in;
    j["k_minus_out"] = rep.k_minus_out;
    j["n_plus"] = rep.n_plus;
    j["n_minus"] = rep.n_minus;
    j["closed_disk_s_minus_iq"] = rep.closed_disk_s_minus_iq;
    j["closed_disk_s_plus_iq"] = rep.closed_disk_s_plus_iq;
    j["image"] = to_string(rep.image);
    j["pairing"] = SelfAdjointReport::kPairing;
  }
  j["extension_exists"] = rep.extension_exists ? Json(*rep.extension_exists) : Json(nullptr);
  return j;
}

Json canonical_json(const CanonicalTriple& t) {
  Json j;
  j["r"] = to_json(t.factor.r);
  Json roots = Json::array();
  for (auto b : t.factor.roots) roots.push_back(to_json(b));
  j["r_roots"] = roots;
  j["fejer_riesz_residual"] = format_double(t.factor.residual);
  j["a_numer"] = to_json(t.a_numer);
  j["b_numer"] = to_json(t.b_numer);
  j["a_at_zero"] = to_json(t.a_at_zero);
  j["unit_residual"] = format_double(t.unit_residual);
  j["min_root_modulus"] = format_double(t.min_root_modulus);
  j["sarason_domain"] = t.sarason_domain.to_string("H^2");
  j["identity"] = "T^Sa restricted to (" + t.sarason_domain.inner_factor.to_string() + ")H^2 equals T_omega";
  return j;
}

Json empty_report(const std::string& command) {
  Json j;
  j["command"] = command;
  j["symbol"] = nullptr;
  j["profile"] = nullptr;
  j["adjoint"] = nullptr;
  j["selfadjoint"] = nullptr;
  j["checks"] = Json::array();
  return j;
}

void add_check(Json& report, const std::string& name, bool passed, const std::string& detail) {
  Json c;
  c["name"] = name;
  c["status"] = passed ? "pass" : "fail";
  if (!detail.empty()) c["detail"] = detail;
  report["checks"].push_back(c);
}

bool all_checks_pass(const Json& report) {
  for (const auto& c : report["checks"]) {
    if (c["status"] != "pass") return false;
  }
  return true;
}

std::string emit_report(const Json& report, bool json) {
  if (json) return report.dump(2) + "\n";
  std::ostringstream os;
  emit_text(os, report, 0);
  return os.str();
}

}  // namespace toeplitz::cli
