#include <doctest.h>

#include "boolreg/analysis.hpp"
#include "boolreg/report.hpp"

using namespace boolreg;

TEST_CASE("subsets") {
  const auto subsets = subsets_of(MethodSet::from_codes("ff,cc,it"));
  REQUIRE(subsets.size() == 7);
  CHECK(subsets[0] == MethodSet::from_codes("ff"));
  CHECK(subsets[1] == MethodSet::from_codes("it"));
  CHECK(subsets[2] == MethodSet::from_codes("ff,it"));
  CHECK(subsets[6] == MethodSet::from_codes("ff,cc,it"));
  CHECK(subsets_of(canonical_base()).size() == 255);
}

TEST_CASE("sweep") {
  SearchOptions options;
  const auto entries = sweep_subsets(canonical_base(), options, 2);
  REQUIRE(entries.size() == 255);
  CHECK(entries.back().methods == canonical_base());
  CHECK(entries.back().verdict.kind == Verdict::Kind::Bound);
  CHECK(entries.back().verdict.k == 1);
  for (const SweepEntry& e : entries) {
    if (e.methods == MethodSet::from_codes("cc")) CHECK(e.verdict.to_string() == "bound 3");
    if (e.methods == MethodSet::from_codes("ff")) CHECK(e.verdict.kind == Verdict::Kind::CertifiedIncomplete);
    CHECK(e.verdict.kind != Verdict::Kind::UnknownBeyond);
  }
  const std::string one = sweep_json(canonical_base(), options, entries).dump();
  const std::string two = sweep_json(canonical_base(), options, sweep_subsets(canonical_base(), options, 1)).dump();
  CHECK(one == two);
}

TEST_CASE("corollary conditions") {
  CHECK(corollary3_condition(MethodSet::from_codes("if,it")) == 1);
  CHECK(corollary3_condition(MethodSet::from_codes("ff,tt,ii")) == 1);
  CHECK(corollary3_condition(MethodSet::from_codes("cc,ii")) == 2);
  CHECK(corollary3_condition(MethodSet::from_codes("ff,tt")) == 0);
  CHECK(corollary3_condition(MethodSet::from_codes("ff,tt,ii,cc,if,it")) == 0);
  CHECK(corollary3_condition(MethodSet::from_codes("cc,tc")) == 0);
}

TEST_CASE("corollary report") {
  const CorollaryReport r = corollary3_check(5, 1);
  CHECK(r.covered == 42);
  CHECK(r.stated == 44);
  CHECK_FALSE(r.count_matches());
  for (const CorollaryEntry& e : r.entries) {
    if (e.methods == MethodSet::from_codes("cc,ii")) {
      CHECK(e.condition == 2);
      CHECK(e.verdict.kind == Verdict::Kind::Bound);
    }
  }
  CHECK(r.mismatches.size() == 28);
}

TEST_CASE("report json") {
  SearchOptions options;
  const MethodSet cc = MethodSet::from_codes("cc");
  const Json j = subset_json(cc, strict_bound(cc, options));
  CHECK(j["methods"] == Json::array({"cc"}));
  CHECK(j["verdict"]["kind"] == "bound");
  CHECK(j["verdict"]["k"] == 3);
  CHECK(j["verdict"]["witnesses"].size() == 16);
  CHECK(j["verdict"]["witnesses"]["f.cc"] == "f.cc");

  const MethodSet ff = MethodSet::from_codes("ff");
  const Json k = verdict_json(strict_bound(ff, options));
  CHECK(k["kind"] == "incomplete");
  CHECK(k["certificate"] == Json{{"kind", "unwritable"}, {"input", 0}, {"required", 1}});

  options.kmax = 1;
  const Json u = verdict_json(strict_bound(cc, options));
  CHECK(u["kind"] == "unknown");
  CHECK(u["kmax"] == 1);
  CHECK(u["resolved"].size() == 5);

  const Focus f("f");
  const ServiceFamily fam = ServiceFamily::singleton(f, ServiceState::reg(true, MethodSet::from_codes("ii,cc")))
                                .with(Focus("g"), ServiceState::empty());
  CHECK(family_json(fam).dump() == R"({"f":{"content":1,"methods":["ii","cc"]},"g":"empty"})");
}

TEST_CASE("text and csv renderings") {
  const auto classes = equivalence_classes(Focus("f"));
  const std::string text = classes_text(classes);
  CHECK(text.starts_with("+f.ff | +f.ff -f.tf\n"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 16);
  CHECK(classes_json(classes).size() == 16);
  CHECK(minimal_sets_json(minimal_method_sets()).size() == 256);

  SearchOptions options;
  const auto entries = sweep_subsets(MethodSet::from_codes("ff,cc"), options, 1);
  CHECK(sweep_csv(entries) ==
        "methods,size,kind,k,target,certificate,resolved\n"
        "ff,1,incomplete,,-f.tt,unwritable(0->1),\n"
        "cc,1,bound,3,,,16\n"
        "ff cc,2,bound,3,,,16\n");
}
