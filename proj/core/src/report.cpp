#include "boolreg/report.hpp"

#include <sstream>

namespace boolreg {

namespace {

Json witness_map(const std::vector<Witness>& witnesses) {
  Json out = Json::object();
  for (const Witness& w : witnesses) out[w.target.code()] = render_sequence(w.sequence);
  return out;
}

const char* kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Bound: return "bound";
    case Verdict::Kind::CertifiedIncomplete: return "incomplete";
    case Verdict::Kind::UnknownBeyond: return "unknown";
  }
  return "unknown";
}

std::string join_codes(MethodSet m, char sep) {
  std::string out;
  for (Method x : m.methods()) {
    if (!out.empty()) out += sep;
    out += x.code();
  }
  return out;
}

}  // namespace

Json method_list_json(MethodSet m) {
  Json out = Json::array();
  for (Method x : m.methods()) out.push_back(x.code());
  return out;
}

Json certificate_json(const Certificate& c) {
  if (c.kind == Certificate::Kind::InputBlindBranching) {
    return Json{{"kind", "input-blind-branching"}};
  }
  return Json{{"kind", "unwritable"}, {"input", c.input ? 1 : 0}, {"required", c.required ? 1 : 0}};
}

Json verdict_json(const Verdict& v) {
  Json out;
  out["kind"] = kind_name(v.kind);
  switch (v.kind) {
    case Verdict::Kind::Bound:
      out["k"] = v.k;
      out["witnesses"] = witness_map(v.witnesses);
      break;
    case Verdict::Kind::CertifiedIncomplete:
      out["target"] = v.target->code();
      out["certificate"] = certificate_json(*v.certificate);
      break;
    case Verdict::Kind::UnknownBeyond:
      out["kmax"] = v.k;
      out["resolved"] = witness_map(v.witnesses);
      break;
  }
  return out;
}

Json subset_json(MethodSet m, const Verdict& v) {
  return Json{{"methods", method_list_json(m)}, {"verdict", verdict_json(v)}};
}

Json classes_json(const std::vector<EquivalenceClass>& classes) {
  Json out = Json::array();
  for (const EquivalenceClass& c : classes) {
    Json members = Json::array();
    for (const Instruction& u : c.members) members.push_back(render_instruction(u));
    out.push_back({{"representative", render_instruction(c.representative)},
                   {"size", c.members.size()},
                   {"members", members}});
  }
  return out;
}

Json minimal_sets_json(const std::vector<MethodSet>& sets) {
  Json out = Json::array();
  for (MethodSet m : sets) out.push_back(method_list_json(m));
  return out;
}

SweepSummary summarize_sweep(const std::vector<SweepEntry>& entries) {
  SweepSummary s;
  for (const SweepEntry& e : entries) {
    switch (e.verdict.kind) {
      case Verdict::Kind::Bound:
        if (s.bound_counts.size() <= e.verdict.k) s.bound_counts.resize(e.verdict.k + 1, 0);
        ++s.bound_counts[e.verdict.k];
        break;
      case Verdict::Kind::CertifiedIncomplete: ++s.incomplete; break;
      case Verdict::Kind::UnknownBeyond: ++s.unknown; break;
    }
  }
  return s;
}

Json sweep_json(MethodSet base, const SearchOptions& options,
                const std::vector<SweepEntry>& entries) {
  const SweepSummary s = summarize_sweep(entries);
  Json bounds = Json::object();
  for (std::size_t k = 1; k < s.bound_counts.size(); ++k) {
    if (s.bound_counts[k] > 0) bounds[std::to_string(k)] = s.bound_counts[k];
  }
  Json subsets = Json::array();
  Json unknown = Json::array();
  for (const SweepEntry& e : entries) {
    subsets.push_back(subset_json(e.methods, e.verdict));
    if (e.verdict.kind == Verdict::Kind::UnknownBeyond) unknown.push_back(method_list_json(e.methods));
  }
  Json out;
  out["base"] = method_list_json(base);
  out["kmax"] = options.kmax;
  out["label_slack"] = options.label_slack;
  out["summary"] = {{"subsets", entries.size()},
                    {"bound", bounds},
                    {"incomplete", s.incomplete},
                    {"unknown", s.unknown}};
  out["unknown"] = unknown;
  out["subsets"] = subsets;
  return out;
}

std::string sweep_csv(const std::vector<SweepEntry>& entries) {
  std::ostringstream out;
  out << "methods,size,kind,k,target,certificate,resolved\n";
  for (const SweepEntry& e : entries) {
    const Verdict& v = e.verdict;
    out << join_codes(e.methods, ' ') << ',' << e.methods.size() << ',' << kind_name(v.kind) << ',';
    if (v.kind == Verdict::Kind::Bound || v.kind == Verdict::Kind::UnknownBeyond) out << v.k;
    out << ',';
    if (v.target) out << v.target->code();
    out << ',';
    if (v.certificate) out << v.certificate->to_string();
    out << ',';
    if (v.kind != Verdict::Kind::CertifiedIncomplete) out << v.witnesses.size();
    out << '\n';
  }
  return out.str();
}

std::string sweep_text(const std::vector<SweepEntry>& entries) {
  std::ostringstream out;
  for (const SweepEntry& e : entries) {
    out << '{' << join_codes(e.methods, ',') << "}: " << e.verdict.to_string() << '\n';
  }
  const SweepSummary s = summarize_sweep(entries);
  out << "subsets: " << entries.size();
  for (std::size_t k = 1; k < s.bound_counts.size(); ++k) {
    if (s.bound_counts[k] > 0) out << ", bound " << k << ": " << s.bound_counts[k];
  }
  out << ", incomplete: " << s.incomplete << ", unknown: " << s.unknown << '\n';
  return out.str();
}

Json corollary_json(const CorollaryReport& report) {
  Json entries = Json::array();
  for (const CorollaryEntry& e : report.entries) {
    Json row = subset_json(e.methods, e.verdict);
    row["condition"] = e.condition;
    row["expected"] = e.expected;
    row["matches"] = e.matches;
    entries.push_back(std::move(row));
  }
  Json out;
  out["covered"] = report.covered;
  out["stated"] = report.stated;
  out["count_matches"] = report.count_matches();
  out["mismatches"] = report.mismatches;
  out["entries"] = entries;
  return out;
}

std::string verdict_text(MethodSet m, const Verdict& v) {
  std::ostringstream out;
  out << '{' << join_codes(m, ',') << "}: " << v.to_string() << '\n';
  for (const Witness& w : v.witnesses) {
    out << "  " << w.target.code() << " <- " << render_sequence(w.sequence) << '\n';
  }
  return out.str();
}

std::string classes_text(const std::vector<EquivalenceClass>& classes) {
  std::ostringstream out;
  for (const EquivalenceClass& c : classes) {
    out << render_instruction(c.representative) << " |";
    for (const Instruction& u : c.members) out << ' ' << render_instruction(u);
    out << '\n';
  }
  return out.str();
}

Json family_json(const ServiceFamily& u) {
  Json out = Json::object();
  for (const auto& [focus, state] : u.entries()) {
    if (state.is_empty()) {
      out[focus.name()] = "empty";
    } else {
      out[focus.name()] = {{"content", state.content() ? 1 : 0}, {"methods", method_list_json(state.methods())}};
    }
  }
  return out;
}

}  // namespace boolreg
