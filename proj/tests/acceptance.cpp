#include "covariant/suite.hpp"

#include <chrono>
#include <iostream>

using namespace covariant;

// Runs every acceptance criterion with pinned settings and prints one line
// per criterion. Exits nonzero if any criterion fails.
int main() {
  SuiteConfig config;
  config.seed = 1;
  config.invariance_samples = 100;
  config.polytope_samples = 500;
  config.flag_samples = 200;
  config.equivariance_samples = 20;
  config.monomial_cap = kDefaultMonomialCap;

  bool all_passed = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const auto start = std::chrono::steady_clock::now();
    const CriterionResult result = run_criterion(id, config);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_passed = all_passed && result.passed();

    std::cout << (result.passed() ? "[PASS] " : "[FAIL] ") << id << " " << result.title << " ("
              << result.count(Verdict::Pass) << " pass, " << result.count(Verdict::Fail) << " fail, "
              << result.count(Verdict::Skipped) << " skipped; " << static_cast<long>(seconds * 1000) << " ms)";
    for (const auto& check : result.checks) {
      if (check.verdict == Verdict::Pass) continue;
      std::cout << " first " << to_string(check.verdict) << ": " << check.name;
      if (!check.witness.is_null()) std::cout << " witness " << check.witness.dump();
      break;
    }
    std::cout << std::endl;
  }
  return all_passed ? 0 : 1;
}
