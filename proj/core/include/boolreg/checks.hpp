#pragma once

// The acceptance suite: one check per reference result, each with its own
// time limit. Used by the `verify` command and the acceptance test.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "boolreg/translation.hpp"

namespace boolreg {

inline constexpr std::uint64_t kDefaultSeed = 0xB00;

struct CheckConfig {
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 0;
  std::uint32_t sweep_kmax = 6;
  std::uint32_t corollary_kmax = 5;
  std::uint32_t bound_kmax = 6;
  /// Fixture table under audit; tests swap in corrupted copies.
  std::vector<FixtureItem> fixtures = fixture_items();
};

struct CheckResult {
  int number = 0;
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  std::vector<std::string> failures;
  double seconds = 0;
  double limit_seconds = 0;
};

CheckResult check_classes(const CheckConfig& config);
CheckResult check_axiom_system(const CheckConfig& config);
CheckResult check_minimal_sets(const CheckConfig& config);
CheckResult check_strict_bounds(const CheckConfig& config);
CheckResult check_fixtures(const CheckConfig& config);
CheckResult check_corollary3(const CheckConfig& config);
CheckResult check_rewrite_property(const CheckConfig& config);
CheckResult check_search_oracle(const CheckConfig& config);
CheckResult check_semantics_axioms(const CheckConfig& config);
CheckResult check_sweep(const CheckConfig& config);

struct CheckSpec {
  int number;
  const char* id;
  CheckResult (*run)(const CheckConfig&);
};

/// All checks in order.
const std::vector<CheckSpec>& acceptance_checks();

/// Runs the checks whose number is in `only` (all when empty), timing each;
/// a check over its limit fails. `progress` sees each result as it lands.
std::vector<CheckResult> run_acceptance(
    const CheckConfig& config, const std::vector<int>& only = {},
    const std::function<void(const CheckResult&)>& progress = {});

}  // namespace boolreg
