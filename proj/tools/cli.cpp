#include "cli.hpp"

#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"
#include "toeplitz/acceptance.hpp"
#include "toeplitz/corpus.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/literal.hpp"

namespace toeplitz::cli {

namespace {

struct Request {
  std::string s = "[]";
  std::string q = "[\"1\"]";
  double p = 2.0;
  std::string mode = "exact";
  double tol = 1e-9;
  bool json = false;

  std::string h = "[]";
  std::string h_den = "[\"1\"]";
  std::string r = "[]";
  std::string r1 = "[]";
  std::string lambda = "0";
  std::string f_num, f_den = "[\"1\"]", g_num, g_den = "[\"1\"]";
  int k = 1;
  bool emit_curve = false;
  int samples = 1024;
};

// Parse failures name the offending option so the position is unambiguous.
Poly parse_option(const std::string& option, const std::string& text) {
  try {
    return parse_poly_literal(text);
  } catch (const ParseError& e) {
    throw ParseError(e.position(), e.expected() + " in --" + option);
  }
}

GaussianRational parse_scalar_option(const std::string& option, const std::string& text) {
  try {
    return parse_complex_literal(text);
  } catch (const ParseError& e) {
    throw ParseError(e.position(), e.expected() + " in --" + option);
  }
}

class Session {
 public:
  explicit Session(const Request& req) : req_(req) {
    opt_.numeric = req.mode == "numeric";
    opt_.p = req.p;
  }

  Json analyze_cmd(std::ostream& out) {
    const auto omega = symbol();
    if (req_.emit_curve) {
      emit_curve(omega, out);
      return {};
    }
    Json rep = base("analyze", omega);
    const auto fwd = profile(omega, req_.p);
    const auto adj = adjoint_profile(omega, req_.p);
    rep["profile"] = profile_json(fwd, primal_space(req_.p), opt_);
    rep["adjoint"] = profile_json(adj, dual_space(req_.p), opt_);
    if (omega.is_ratt()) {
      const auto sa = toeplitz::analyze(omega);
      rep["selfadjoint"] = selfadjoint_json(sa);
      profile_checks(rep, omega, fwd, adj);
      for (const auto& c : sa.checks) add_check(rep, "selfadjoint: " + c.name, c.passed, c.detail);
    } else {
      profile_checks(rep, omega, fwd, adj);
    }
    return rep;
  }

  Json adjoint_cmd() {
    const auto omega = symbol();
    Json rep = base("adjoint", omega);
    const auto adj = adjoint_profile(omega, req_.p);
    rep["adjoint"] = profile_json(adj, dual_space(req_.p), opt_);
    rep["adjoint"]["domain_generator"] = to_json(adjoint_domain_generator(omega));
    if (omega.is_ratt()) {
      Json tilde = Json::array();
      for (const auto& t : tilde_p_star_basis(omega)) {
        tilde.push_back({{"r", to_json(t.r)}, {"r1", to_json(t.r1)}, {"r2", to_json(t.r2)}});
      }
      rep["adjoint"]["p_tilde_star"] = tilde;
    }
    adjoint_kernel_check(rep, omega, adj);
    return rep;
  }

  Json selfadjoint_cmd(const std::string& command, const RationalSymbol& omega) {
    Json rep = base(command, omega);
    rep["profile"] = profile_json(profile(omega, req_.p), primal_space(req_.p), opt_);
    const auto adj = adjoint_profile(omega, req_.p);
    rep["adjoint"] = profile_json(adj, dual_space(req_.p), opt_);
    const auto sa = toeplitz::analyze(omega);
    rep["selfadjoint"] = selfadjoint_json(sa);
    for (const auto& c : sa.checks) add_check(rep, c.name, c.passed, c.detail);
    return rep;
  }

  Json apply_cmd() {
    const auto omega = symbol();
    Json rep = base("apply", omega);
    const DomElement f{RationalFunction(parse_option("h", req_.h), parse_option("h-den", req_.h_den)),
                       parse_option("r", req_.r)};
    const RationalFunction tf = apply_forward(omega, f);
    Json result;
    result["f"] = to_json(f.value(omega), opt_);
    result["T_f"] = to_json(tf, opt_);

    const Poly gen = adjoint_domain_generator(omega);
    const RationalFunction v = RationalFunction::polynomial(Poly::one());
    const auto residual = adjoint_identity_check(omega, f, v);
    result["adjoint_probe"] = {{"g", to_json(gen)}, {"T_star_g", to_json(apply_adjoint(omega, v), opt_)},
                               {"residual", to_json(residual)}};
    add_check(rep, "<T f, g> = <f, T* g>", residual.is_zero(), "g = " + gen.to_string());

    const auto probe = sarason_axioms_probe(omega, f);
    add_check(rep, "z f in Dom(T)", probe.axiom1);
    add_check(rep, "T_z* T T_z f = T f", probe.axiom2);
    if (probe.axiom3_applicable) add_check(rep, "T_z* f in Dom(T)", probe.axiom3);
    rep["result"] = result;
    return rep;
  }

  Json pair_cmd() {
    Json rep = empty_report("pair");
    const RationalFunction f(parse_option("f-num", req_.f_num), parse_option("f-den", req_.f_den));
    const RationalFunction g(parse_option("g-num", req_.g_num), parse_option("g-den", req_.g_den));
    const auto value = hardy_pairing(f, g);
    Json result;
    result["f"] = to_json(f, opt_);
    result["g"] = to_json(g, opt_);
    result["pairing"] = to_json(value);
    if (opt_.numeric) result["pairing_numeric"] = to_json(value.to_complex());
    const auto swapped = hardy_pairing(g, f);
    add_check(rep, "<f, g> = conj <g, f>", swapped.conj() == value);
    rep["result"] = result;
    return rep;
  }

  Json szego_cmd() {
    const auto omega = symbol();
    Json rep = base("szego", omega);
    const auto lambda = parse_scalar_option("lambda", req_.lambda);
    const auto cert = szego_eigen(omega, lambda);
    Json result;
    result["lambda"] = to_json(lambda);
    result["c"] = to_json(cert.c);
    result["r"] = to_json(cert.r);
    const Poly kernel{1, -lambda.conj()};
    add_check(rep, "s + (1 - conj(lambda) z) r = q c", omega.s() + kernel * cert.r == omega.q() * cert.c);
    add_check(rep, "deg r < m", cert.r.is_zero() || cert.r.deg() < omega.m());
    if (!lambda.is_zero()) {
      const auto direct = omega.eval(GaussianRational(1) / lambda.conj());
      if (direct) add_check(rep, "c = omega(1 / conj(lambda))", *direct == cert.c);
    }
    rep["result"] = result;
    return rep;
  }

  Json canonical_cmd() {
    const auto omega = symbol();
    Json rep = base("canonical", omega);
    const auto triple = canonical_form(omega);
    rep["result"] = canonical_json(triple);
    std::ostringstream tol;
    tol << "tol " << req_.tol;
    add_check(rep, "|a|^2 + |b|^2 = 1 on the circle", triple.unit_residual <= req_.tol, tol.str());
    add_check(rep, "r has no zeros in the closed disk", triple.min_root_modulus > 1);
    add_check(rep, "a(0) > 0",
              triple.a_at_zero.real() > 0 && std::abs(triple.a_at_zero.imag()) <= req_.tol * std::abs(triple.a_at_zero),
              tol.str());
    return rep;
  }

  Json compress_cmd() {
    const auto omega = symbol();
    Json rep = base("compress", omega);
    const Poly r1 = parse_option("r1", req_.r1);
    const Poly r = compression_solve(omega, r1);
    const Poly via_division = divrem(r1 * omega.s(), omega.q()).quotient;
    Json result;
    result["r1"] = to_json(r1);
    result["r"] = to_json(r);
    result["r_by_division"] = to_json(via_division);
    add_check(rep, "compression agrees with polynomial division", r == via_division);
    rep["result"] = result;
    return rep;
  }

  Json selftest_cmd(std::ostream& out) {
    Json rep = empty_report("selftest");
    const auto seed = seed_from_env();
    rep["seed"] = std::to_string(seed);
    for (const auto& r : run_acceptance(seed)) {
      if (!req_.json) out << format_result(r) << "\n";
      add_check(rep, std::to_string(r.id) + " " + r.name, r.passed, r.detail);
    }
    return rep;
  }

  RationalSymbol symbol() const { return make_symbol(parse_option("s", req_.s), parse_option("q", req_.q)); }

 private:
  Json base(const std::string& command, const RationalSymbol& omega) const {
    Json rep = empty_report(command);
    rep["symbol"] = symbol_json(omega, opt_);
    return rep;
  }

  void emit_curve(const RationalSymbol& omega, std::ostream& out) const {
    out << "theta,re,im,at_pole\n";
    out << std::setprecision(17);
    for (const auto& smp : sample_curve(omega, req_.samples)) {
      out << smp.theta << ",";
      if (smp.at_pole) {
        out << "nan,nan,1\n";
      } else {
        out << smp.value.real() << "," << smp.value.imag() << ",0\n";
      }
    }
  }

  void profile_checks(Json& rep, const RationalSymbol& omega, const OperatorProfile& fwd,
                      const OperatorProfile& adj) const {
    if (omega.is_ratt() && fwd.kernel_basis_exact) {
      bool ok = true;
      for (const auto& f : fwd.kernel_basis) {
        const auto d = split_domain(omega, f);
        ok = ok && apply_forward(omega, {d.h, d.r}).is_zero();
      }
      add_check(rep, "forward kernel basis annihilated", ok);
    }
    adjoint_kernel_check(rep, omega, adj);
    if (fwd.complete) {
      add_check(rep, "adjoint range dense iff T injective", adj.dense_range == fwd.injective);
      add_check(rep, "closed range agrees for T and T*", adj.closed_range == fwd.closed_range);
    }
    if (fwd.index && fwd.kernel_dim && fwd.range_complement_dim) {
      add_check(rep, "index = dim ker - codim ran", *fwd.index == *fwd.kernel_dim - *fwd.range_complement_dim);
    }
  }

  static void adjoint_kernel_check(Json& rep, const RationalSymbol& omega, const OperatorProfile& adj) {
    if (!omega.splits_exact() || !adj.kernel_basis_exact) return;
    // kernel elements g lie in gen * H^{p'}; apply_adjoint takes v with g = gen * v
    const Poly gen = adjoint_domain_generator(omega);
    bool ok = true;
    for (const auto& g : adj.kernel_basis) {
      ok = ok && divides(gen, g.numer()) && apply_adjoint(omega, {exact_div(g.numer(), gen), g.denom()}).is_zero();
    }
    add_check(rep, "adjoint kernel basis annihilated", ok);
  }

  const Request& req_;
  EmitOptions opt_;
};

int exit_code_for(const Error& e) {
  if (e.code() == ErrorCode::ParseError) return kParseError;
  if (is_internal(e.code())) return kInconsistency;
  return kPrecondition;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unbounded Toeplitz operators with rational symbols"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Request req;

  auto common = [&req](CLI::App* sub, bool with_symbol) {
    if (with_symbol) {
      sub->add_option("--s", req.s, "numerator coefficients, ascending");
      sub->add_option("--q", req.q, "denominator coefficients, ascending");
    }
    sub->add_option("--p", req.p, "Hardy space exponent label")->check(CLI::Range(1.0, 1e300));
    sub->add_option("--mode", req.mode, "exact or numeric output")->check(CLI::IsMember({"exact", "numeric"}));
    sub->add_option("--tol", req.tol, "tolerance for floating-point checks")->check(CLI::PositiveNumber);
    sub->add_flag("--json", req.json, "machine-readable output");
  };

  auto* analyze = app.add_subcommand("analyze", "forward and adjoint profiles, symmetry report");
  common(analyze, true);
  analyze->add_flag("--emit-curve", req.emit_curve, "print sampled omega(e^{it}) as CSV instead");
  analyze->add_option("--samples", req.samples, "curve sample count")->check(CLI::Range(1, 1 << 20));
  auto* adjoint = app.add_subcommand("adjoint", "adjoint profile");
  common(adjoint, true);
  auto* selfadjoint = app.add_subcommand("selfadjoint", "symmetry and selfadjoint extensions");
  common(selfadjoint, true);
  auto* apply = app.add_subcommand("apply", "apply T to f = h + r/q");
  common(apply, true);
  apply->add_option("--h", req.h, "numerator of the H^p part");
  apply->add_option("--h-den", req.h_den, "denominator of the H^p part");
  apply->add_option("--r", req.r, "polynomial r with deg r < m");
  auto* pair = app.add_subcommand("pair", "exact Hardy pairing <f, g>");
  common(pair, false);
  pair->add_option("--f-num", req.f_num)->required();
  pair->add_option("--f-den", req.f_den);
  pair->add_option("--g-num", req.g_num)->required();
  pair->add_option("--g-den", req.g_den);
  auto* szego = app.add_subcommand("szego", "eigenrelation for the Szego kernel");
  common(szego, true);
  szego->add_option("--lambda", req.lambda, "point of the open disk");
  auto* canonical = app.add_subcommand("canonical", "Fejer-Riesz canonical form a = q/r, b = s/r");
  common(canonical, true);
  auto* compress = app.add_subcommand("compress", "solve the compressed Toeplitz system for r");
  common(compress, true);
  compress->add_option("--r1", req.r1, "polynomial r1 with deg r1 < m");
  auto* helson = app.add_subcommand("helson", "the symbol (-i)^k (z+1)^k / (z-1)^k");
  common(helson, false);
  helson->add_option("--k", req.k)->check(CLI::Range(1, 64));
  auto* selftest = app.add_subcommand("selftest", "run the acceptance corpus");
  common(selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kParseError;
  }

  try {
    Session session(req);
    Json rep;
    if (*analyze) {
      rep = session.analyze_cmd(out);
      if (rep.is_null()) return kOk;
    } else if (*adjoint) {
      rep = session.adjoint_cmd();
    } else if (*selfadjoint) {
      rep = session.selfadjoint_cmd("selfadjoint", session.symbol());
    } else if (*apply) {
      rep = session.apply_cmd();
    } else if (*pair) {
      rep = session.pair_cmd();
    } else if (*szego) {
      rep = session.szego_cmd();
    } else if (*canonical) {
      rep = session.canonical_cmd();
    } else if (*compress) {
      rep = session.compress_cmd();
    } else if (*helson) {
      rep = session.selfadjoint_cmd("helson", helson_symbol(req.k));
      rep["k"] = req.k;
    } else {
      rep = session.selftest_cmd(out);
      if (req.json) out << emit_report(rep, true);
      return all_checks_pass(rep) ? kOk : kInconsistency;
    }
    out << emit_report(rep, req.json);
    return all_checks_pass(rep) ? kOk : kInconsistency;
  } catch (const ParseError& e) {
    err << "error: ParseError at position " << e.position() << ": expected " << e.expected() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace toeplitz::cli
