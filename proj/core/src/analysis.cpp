#include "boolreg/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace boolreg {

namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  if (jobs <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
}

const MethodSet& six_set() {
  static const MethodSet m = MethodSet::from_codes("ff,tt,ii,cc,if,it");
  return m;
}

}  // namespace

std::vector<MethodSet> subsets_of(MethodSet base) {
  const std::vector<Method> members = base.methods();
  std::vector<MethodSet> out;
  const std::uint32_t n = static_cast<std::uint32_t>(members.size());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    MethodSet s;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.insert(members[i]);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<SweepEntry> sweep_subsets(MethodSet base, const SearchOptions& options,
                                      unsigned jobs) {
  const std::vector<MethodSet> subsets = subsets_of(base);
  std::vector<SweepEntry> out(subsets.size());
  parallel_for(subsets.size(), jobs, [&](std::size_t i) {
    out[i] = SweepEntry{subsets[i], strict_bound(subsets[i], options)};
  });
  return out;
}

int corollary3_condition(MethodSet m) {
  if (!m.is_subset_of(six_set()) || m == six_set()) return 0;
  const auto has = [&](const char* codes) { return MethodSet::from_codes(codes).is_subset_of(m); };
  if (has("cc")) return 2;
  if (has("ff,tt,ii") || has("if,it")) return 1;
  return 0;
}

CorollaryReport corollary3_check(std::uint32_t kmax, unsigned jobs) {
  CorollaryReport report;
  for (MethodSet m : subsets_of(six_set())) {
    const int condition = corollary3_condition(m);
    if (condition == 0) continue;
    report.entries.push_back({m, condition, condition == 1 ? 4u : 3u, {}, false});
  }
  report.covered = report.entries.size();
  SearchOptions options;
  options.kmax = kmax;
  parallel_for(report.entries.size(), jobs, [&](std::size_t i) {
    CorollaryEntry& e = report.entries[i];
    e.verdict = strict_bound(e.methods, options);
    e.matches = e.verdict.kind == Verdict::Kind::Bound && e.verdict.k == e.expected;
  });
  for (const CorollaryEntry& e : report.entries) {
    if (!e.matches) {
      report.mismatches.push_back("{" + e.methods.to_codes() + "}: expected Bound(" +
                                  std::to_string(e.expected) + "), got " +
                                  e.verdict.to_string());
    }
  }
  return report;
}

}  // namespace boolreg
