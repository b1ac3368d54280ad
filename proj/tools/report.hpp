#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "toeplitz/apply_engine.hpp"
#include "toeplitz/operator_profile.hpp"
#include "toeplitz/selfadjoint.hpp"
#include "toeplitz/smirnov.hpp"
#include "toeplitz/symbol.hpp"

namespace toeplitz::cli {

using Json = nlohmann::ordered_json;

struct EmitOptions {
  bool numeric = false;  // add floating-point companions of exact data
  double p = 2.0;
};

Json to_json(const GaussianRational& c);
Json to_json(const Poly& p);
Json to_json(const RationalFunction& f, const EmitOptions& opt);
Json to_json(std::complex<double> c);
Json to_json(const ComplexPoly& p);

Json symbol_json(const RationalSymbol& omega, const EmitOptions& opt);
Json profile_json(const OperatorProfile& prof, const std::string& space, const EmitOptions& opt);
Json selfadjoint_json(const SelfAdjointReport& rep);
Json canonical_json(const CanonicalTriple& t);

// Skeleton with the five stable top-level keys, all null / empty.
Json empty_report(const std::string& command);

void add_check(Json& report, const std::string& name, bool passed, const std::string& detail = {});
bool all_checks_pass(const Json& report);

// Dual space label for the adjoint side, H^{p'} with 1/p + 1/p' = 1.
std::string dual_space(double p);
std::string primal_space(double p);

std::string emit_report(const Json& report, bool json);

}  // namespace toeplitz::cli
