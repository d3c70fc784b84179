#pragma once

// JSON, CSV and plain-text renderings of analysis results. Output is a pure
// function of its input, so equal inputs give byte-identical text.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "boolreg/analysis.hpp"
#include "boolreg/equivalence.hpp"

namespace boolreg {

using Json = nlohmann::ordered_json;

Json method_list_json(MethodSet m);
Json certificate_json(const Certificate& c);
Json verdict_json(const Verdict& v);
/// {"methods":[...], "verdict":{...}}
Json subset_json(MethodSet m, const Verdict& v);

Json classes_json(const std::vector<EquivalenceClass>& classes);
Json minimal_sets_json(const std::vector<MethodSet>& sets);

struct SweepSummary {
  std::vector<std::size_t> bound_counts;  // index k
  std::size_t incomplete = 0;
  std::size_t unknown = 0;
};
SweepSummary summarize_sweep(const std::vector<SweepEntry>& entries);

Json sweep_json(MethodSet base, const SearchOptions& options,
                const std::vector<SweepEntry>& entries);
std::string sweep_csv(const std::vector<SweepEntry>& entries);
std::string sweep_text(const std::vector<SweepEntry>& entries);

Json corollary_json(const CorollaryReport& report);

/// {"f": {"content": 1, "methods": ["ii", ...]}, "g": "empty"}
Json family_json(const ServiceFamily& u);

std::string verdict_text(MethodSet m, const Verdict& v);
/// One row per class: "representative | members...".
std::string classes_text(const std::vector<EquivalenceClass>& classes);

}  // namespace boolreg
