#include <cstdlib>
#include <iostream>

#include "toeplitz/acceptance.hpp"
#include "toeplitz/corpus.hpp"

// With no argument runs every criterion; with an id runs only that one.
int main(int argc, char** argv) {
  const auto seed = toeplitz::seed_from_env();
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  std::cout << "seed " << seed << "\n";
  bool ok = true;
  int ran = 0;
  for (const auto& c : toeplitz::acceptance_criteria()) {
    if (only != 0 && c.id != only) continue;
    const auto r = toeplitz::run_criterion(c, seed);
    std::cout << toeplitz::format_result(r) << std::endl;
    ok = ok && r.passed;
    ++ran;
  }
  return ok && ran > 0 ? 0 : 1;
}
