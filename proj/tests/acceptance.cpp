// Acceptance suite: one PASS/FAIL line per criterion, then the failures.
// Exit status 0 only when every criterion passes.

#include <cstdio>
#include <iostream>

#include "boolreg/checks.hpp"

int main() {
  using namespace boolreg;
  const CheckConfig config;
  std::vector<CheckResult> failed;
  const auto results = run_acceptance(config, {}, [&](const CheckResult& r) {
    std::printf("[%s] criterion %2d %-14s %7.2fs / %5.0fs  %s\n", r.passed ? "PASS" : "FAIL", r.number,
                r.id.c_str(), r.seconds, r.limit_seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) failed.push_back(r);
  });
  for (const CheckResult& r : failed) {
    std::cout << "\ncriterion " << r.number << " (" << r.id << ") failures:\n";
    for (const std::string& f : r.failures) std::cout << "  - " << f << '\n';
  }
  std::cout << '\n' << results.size() - failed.size() << " of " << results.size() << " criteria passed\n";
  return failed.empty() ? 0 : 1;
}
