#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace toeplitz {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

/// The eleven acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

// Runs one criterion, turning exceptions into a failed result.
CriterionResult run_criterion(const Criterion& c, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// "PASS  3  adjoint pairing identity  (200 cases, 0 nonzero residuals)  0.41s"
std::string format_result(const CriterionResult& r);

}  // namespace toeplitz
