// boolreg: command-line front end for the Boolean register instruction
// algebra library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "boolreg/analysis.hpp"
#include "boolreg/checks.hpp"
#include "boolreg/report.hpp"
#include "boolreg/translation.hpp"

namespace {

using namespace boolreg;

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint32_t kmax = 6;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  std::string format = "text";
  std::string out;

  bool wants_json() const { return json || format == "json"; }
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file || !(file << text)) throw IoError("cannot write " + cfg.out);
}

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

MethodSet parse_base(const std::string& text) {
  if (text == "canonical") return canonical_base();
  return MethodSet::from_codes(text);
}

int cmd_classify(const Config& cfg) {
  const auto classes = equivalence_classes(search_focus());
  emit(cfg, cfg.wants_json() ? dump(classes_json(classes)) : classes_text(classes));
  return kOk;
}

int cmd_minimal_sets(const Config& cfg) {
  const auto sets = minimal_method_sets();
  if (cfg.wants_json()) {
    emit(cfg, dump(minimal_sets_json(sets)));
    return kOk;
  }
  std::ostringstream out;
  for (MethodSet m : sets) out << m.to_codes() << '\n';
  out << sets.size() << " minimal sets\n";
  emit(cfg, out.str());
  return kOk;
}

int cmd_bound(const Config& cfg, const std::string& methods, bool naive) {
  const MethodSet m = MethodSet::from_codes(methods);
  SearchOptions options;
  options.kmax = cfg.kmax;
  options.strategy = naive ? SearchStrategy::Naive : SearchStrategy::Deduplicated;
  const Verdict v = strict_bound(m, options);
  emit(cfg, cfg.wants_json() ? dump(subset_json(m, v)) : verdict_text(m, v));
  return v.kind == Verdict::Kind::Bound ? kOk : kCheckFailed;
}

int cmd_sweep(const Config& cfg, const std::string& base_text) {
  const MethodSet base = parse_base(base_text);
  SearchOptions options;
  options.kmax = cfg.kmax;
  const auto entries = sweep_subsets(base, options, cfg.jobs);
  if (cfg.format == "csv") {
    emit(cfg, sweep_csv(entries));
  } else if (cfg.wants_json()) {
    emit(cfg, dump(sweep_json(base, options, entries)));
  } else {
    emit(cfg, sweep_text(entries));
  }
  return kOk;
}

int cmd_corollary(const Config& cfg) {
  const CorollaryReport report = corollary3_check(cfg.kmax, cfg.jobs);
  if (cfg.wants_json()) {
    emit(cfg, dump(corollary_json(report)));
  } else {
    std::ostringstream out;
    for (const CorollaryEntry& e : report.entries) {
      out << '{' << e.methods.to_codes() << "} condition " << e.condition << ": expected bound "
          << e.expected << ", got " << e.verdict.to_string() << (e.matches ? "" : "  MISMATCH") << '\n';
    }
    out << "covered " << report.covered << " sets, stated " << report.stated << '\n';
    emit(cfg, out.str());
  }
  return report.mismatches.empty() ? kOk : kCheckFailed;
}

// Map file: {"methods": ["ff", ...], "map": {"+f.if": "+f.ii ; +f.ff ; +f.ff", ...}}
TranslationMap load_map(const std::string& spec) {
  if (spec.starts_with("part") && spec.size() == 5 && spec[4] >= '1' && spec[4] <= '5') {
    return fixture_map(spec[4] - '0');
  }
  Json j;
  try {
    j = Json::parse(read_all(spec));
  } catch (const Json::parse_error& e) {
    throw Error("map file " + spec + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("methods") || !j.contains("map")) {
    throw Error("map file " + spec + ": expected \"methods\" and \"map\"");
  }
  std::string codes;
  for (const auto& c : j.at("methods")) codes += (codes.empty() ? "" : ",") + c.get<std::string>();
  std::map<Instruction, InstructionSeq> sequences;
  for (const auto& [key, value] : j.at("map").items()) {
    sequences.insert_or_assign(parse_instruction(key), parse_sequence(value.get<std::string>()));
  }
  return TranslationMap::build(MethodSet::from_codes(codes), sequences);
}

int cmd_rewrite(const Config& cfg, const std::string& map_spec, const std::string& in) {
  const TranslationMap psi = load_map(map_spec);
  std::string text = read_all(in);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  const InstructionSeq x = parse_sequence(text);
  const InstructionSeq y = rewrite_psi_prime(x, psi);
  if (cfg.wants_json()) {
    Json j;
    j["input"] = render_sequence(x);
    j["output"] = render_sequence(y);
    j["replaced"] = count_replaced(x, psi);
    j["length"] = {{"input", x.size()}, {"output", y.size()}};
    emit(cfg, dump(j));
  } else {
    emit(cfg, render_sequence(y) + "\n");
  }
  return kOk;
}

int cmd_verify(const Config& cfg, const std::vector<int>& only, const std::string& corrupt) {
  CheckConfig cc;
  cc.seed = cfg.seed;
  cc.jobs = cfg.jobs;
  if (!corrupt.empty()) {
    auto it = std::find_if(cc.fixtures.begin(), cc.fixtures.end(),
                           [&](const FixtureItem& f) { return f.id == corrupt; });
    if (it == cc.fixtures.end()) throw Error("unknown fixture item '" + corrupt + "'");
    it->witness = parse_sequence("!");
  }
  const bool json = cfg.wants_json();
  const auto results = run_acceptance(cc, only, [&](const CheckResult& r) {
    if (json || !cfg.out.empty()) return;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.number << ". " << r.id << ": " << r.detail << '\n';
    for (const std::string& f : r.failures) std::cout << "      " << f << '\n';
    std::cout.flush();
  });
  bool all = true;
  std::vector<std::string> failed;
  for (const CheckResult& r : results) {
    all = all && r.passed;
    if (!r.passed) failed.push_back(r.id);
  }
  if (json) {
    Json checks = Json::array();
    for (const CheckResult& r : results) {
      checks.push_back({{"number", r.number},
                        {"id", r.id},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"detail", r.detail},
                        {"failures", r.failures}});
    }
    emit(cfg, dump(Json{{"passed", all}, {"checks", checks}}));
  } else {
    std::ostringstream out;
    if (!cfg.out.empty()) {
      for (const CheckResult& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.number << ". " << r.id << ": " << r.detail << '\n';
        for (const std::string& f : r.failures) out << "      " << f << '\n';
      }
    }
    out << results.size() - failed.size() << " of " << results.size() << " checks passed";
    if (!failed.empty()) {
      out << "; failed:";
      for (const std::string& id : failed) out << ' ' << id;
    }
    out << '\n';
    emit(cfg, out.str());
  }
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean register instruction sets: equivalence and bounded completeness"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--kmax", cfg.kmax, "Longest sequence searched")->check(CLI::Range(1u, kMaxSearchLength));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_flag("--json", cfg.json, "JSON output (same as --format json)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out, "Write output to this file");

  auto* classify = app.add_subcommand("classify", "List the 16 effect classes");
  auto* minimal = app.add_subcommand("minimal-sets", "List the minimal method sets");

  auto* bound = app.add_subcommand("bound", "Strict size bound of one method set");
  std::string methods;
  bool naive = false;
  bound->add_option("--methods", methods, "Comma-separated method codes, e.g. ff,tt,ii")->required();
  bound->add_flag("--naive", naive, "Use plain enumeration instead of the deduplicating search");

  auto* sweep = app.add_subcommand("sweep", "Strict bounds of every subset of a base set");
  std::string base = "canonical";
  sweep->add_option("--base", base, "\"canonical\" or comma-separated method codes");

  auto* corollary = app.add_subcommand("corollary", "Two-condition corollary over subsets of {ff,tt,ii,cc,if,it}");

  auto* rewrite = app.add_subcommand("rewrite", "Translate a sequence into a restricted instruction set");
  std::string map_spec;
  std::string in;
  rewrite->add_option("--map", map_spec, "part1 .. part5, or a JSON map file")->required();
  rewrite->add_option("--in", in, "Input sequence file (default stdin)");

  auto* verify = app.add_subcommand("verify", "Run every acceptance check");
  std::vector<int> only;
  std::string corrupt;
  verify->add_option("--only", only, "Check numbers to run")->delimiter(',')->check(CLI::Range(1, 10));
  verify->add_option("--corrupt-fixture", corrupt)->group("");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (!app.get_option("--kmax")->count() && corollary->parsed()) cfg.kmax = 5;

  try {
    if (classify->parsed()) return cmd_classify(cfg);
    if (minimal->parsed()) return cmd_minimal_sets(cfg);
    if (bound->parsed()) return cmd_bound(cfg, methods, naive);
    if (sweep->parsed()) return cmd_sweep(cfg, base);
    if (corollary->parsed()) return cmd_corollary(cfg);
    if (rewrite->parsed()) return cmd_rewrite(cfg, map_spec, in);
    if (verify->parsed()) return cmd_verify(cfg, only, corrupt);
  } catch (const IoError& e) {
    std::cerr << "boolreg: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "boolreg: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
