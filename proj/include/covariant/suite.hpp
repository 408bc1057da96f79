#ifndef COVARIANT_SUITE_HPP
#define COVARIANT_SUITE_HPP

#include "covariant/graded.hpp"
#include "covariant/json_io.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace covariant {

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::Pass;
  Json details = Json::object();
  Json witness;  // null unless the check failed or was skipped
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;

  std::size_t count(Verdict v) const;
  /// No failures and nothing skipped.
  bool passed() const { return count(Verdict::Fail) == 0 && count(Verdict::Skipped) == 0; }
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  int invariance_samples = 100;
  int polytope_samples = 500;
  int flag_samples = 200;
  int equivariance_samples = 20;
  std::size_t monomial_cap = kDefaultMonomialCap;
  std::set<GroupKind> groups{GroupKind::GL, GroupKind::O, GroupKind::Sp};
  /// Criterion ids to run; empty runs all.
  std::set<int> criteria;
};

inline constexpr int kCriterionCount = 14;

std::string criterion_title(int id);

/// Runs one criterion of the verification grid. Criteria that only concern
/// GL (or only Sp) return no checks when that group is filtered out.
CriterionResult run_criterion(int id, const SuiteConfig& config);

std::vector<CriterionResult> run_suite(const SuiteConfig& config);

Json check_json(const CheckResult& c);

/// Seed of a named check, derived from the suite seed.
std::uint64_t check_seed(std::uint64_t seed, const std::string& name);

/// Scenario grids of the suite.
std::vector<Scenario> invariance_grid(const std::set<GroupKind>& groups);
std::vector<Scenario> generation_grid(const std::set<GroupKind>& groups);

}  // namespace covariant

#endif  // COVARIANT_SUITE_HPP
