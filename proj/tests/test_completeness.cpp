#include <doctest.h>

#include "boolreg/analysis.hpp"
#include "boolreg/completeness.hpp"

using namespace boolreg;

namespace {

Target target(const char* code) { return Target::from_code(code); }
InstructionSeq seq(const char* text) { return parse_sequence(text); }

}  // namespace

TEST_CASE("targets") {
  const auto& all = all_targets();
  CHECK(all.size() == 16);
  for (int i = 0; i < kTargetCount; ++i) {
    CHECK(all[static_cast<std::size_t>(i)].index() == i);
    CHECK(Target::from_code(all[static_cast<std::size_t>(i)].code()) == all[static_cast<std::size_t>(i)]);
  }
  CHECK(Target::of(parse_instruction("-f.tf")) == target("+f.ff"));
  CHECK(Target::of(parse_instruction("-g.tf")) == target("+f.ff"));
  CHECK_THROWS_AS(Target::from_code("#2"), Error);
}

TEST_CASE("realizes") {
  CHECK(realizes(seq("#2"), target("-f.ti")));
  CHECK(realizes(seq("f.cc ; #2"), target("-f.tc")));
  for (const Target& t : all_targets()) CHECK_FALSE(realizes(seq("!"), t));
  CHECK(realizes_axiomatic(seq("#2"), target("-f.ti")));
  CHECK(realizes_axiomatic(seq("f.cc ; #2"), target("-f.tc")));
  CHECK_FALSE(realizes_axiomatic(seq("f.cc ; #3"), target("-f.tc")));
}

TEST_CASE("search alphabet") {
  const auto a = search_alphabet(MethodSet::from_codes("cc"), 2, 1);
  REQUIRE(a.size() == 4 + 1 + 3);
  CHECK(a[0] == Instruction::jump(0));
  CHECK(a[3] == Instruction::jump(3));
  CHECK(a[4] == Instruction::halt());
  CHECK(render_instruction(a[5]) == "f.cc");
}

TEST_CASE("find_witness") {
  const auto w = find_witness(MethodSet::from_codes("cc"), target("f.ff"), 3);
  REQUIRE(w);
  CHECK(w->size() == 2);
  CHECK(realizes(*w, target("f.ff")));
  CHECK(realizes(seq("+f.cc ; f.cc"), target("f.ff")));
  CHECK_FALSE(find_witness(MethodSet::from_codes("cc"), target("f.ff"), 1));
  for (const Target& t : all_targets()) {
    const auto one = find_witness(canonical_base(), t, 1);
    REQUIRE(one);
    CHECK(one->size() == 1);
  }
  CHECK_FALSE(find_witness(MethodSet::from_codes("ff"), target("f.tt"), 6));
}

TEST_CASE("both search strategies return the same least witness") {
  for (const char* codes : {"cc", "ff,tt,ii", "if,it", "ii,tc", "ff,tt,ii,cc"}) {
    const MethodSet m = MethodSet::from_codes(codes);
    SearchOptions fast;
    fast.kmax = 3;
    SearchOptions slow = fast;
    slow.strategy = SearchStrategy::Naive;
    CHECK(search_witnesses(m, fast) == search_witnesses(m, slow));
  }
}

TEST_CASE("transform monoid") {
  CHECK(transform_monoid(MethodSet::from_codes("ff")) == std::vector<UnaryFn>{UnaryFn::F, UnaryFn::I});
  CHECK(transform_monoid(MethodSet::from_codes("tc")).size() == 2);
  CHECK(transform_monoid(MethodSet::from_codes("ff,tt,cc")).size() == 4);
}

TEST_CASE("certificates") {
  const auto unwritable = incompleteness_certificate(MethodSet::from_codes("ff"), target("f.tt"));
  REQUIRE(unwritable);
  CHECK(*unwritable == Certificate{Certificate::Kind::Unwritable, false, true});
  CHECK(unwritable->to_string() == "unwritable(0->1)");
  const auto blind = incompleteness_certificate(MethodSet::from_codes("tc"), target("+f.ii"));
  REQUIRE(blind);
  CHECK(blind->kind == Certificate::Kind::InputBlindBranching);
  for (const Target& t : all_targets()) CHECK_FALSE(incompleteness_certificate(MethodSet::from_codes("cc"), t));
}

TEST_CASE("strict bounds") {
  SearchOptions options;
  const Verdict six = strict_bound(MethodSet::from_codes("ff,tt,ii,cc,if,it"), options);
  CHECK(six.kind == Verdict::Kind::Bound);
  CHECK(six.k == 2);
  CHECK(six.witnesses.size() == 16);
  const Verdict three = strict_bound(MethodSet::from_codes("ff,tt,ii"), options);
  CHECK(three.kind == Verdict::Kind::Bound);
  CHECK(three.k == 4);
  const Verdict cc = strict_bound(MethodSet::from_codes("cc"), options);
  CHECK(cc.kind == Verdict::Kind::Bound);
  CHECK(cc.k == 3);
  const Verdict full = strict_bound(canonical_base(), options);
  CHECK(full.kind == Verdict::Kind::Bound);
  CHECK(full.k == 1);
  const Verdict ff = strict_bound(MethodSet::from_codes("ff"), options);
  CHECK(ff.kind == Verdict::Kind::CertifiedIncomplete);
  CHECK(ff.to_string() == "incomplete -f.tt unwritable(0->1)");
}

TEST_CASE("strict bounds for the two sets where the search improves on the reference bound") {
  SearchOptions options;
  const Verdict four = strict_bound(MethodSet::from_codes("ff,tt,ii,cc"), options);
  CHECK(four.kind == Verdict::Kind::Bound);
  CHECK(four.k == 2);
  const Verdict two = strict_bound(MethodSet::from_codes("if,it"), options);
  CHECK(two.kind == Verdict::Kind::Bound);
  CHECK(two.k == 3);
  CHECK(realizes(seq("+f.cc ; +f.ff"), target("+f.if")));
  CHECK(realizes(seq("-f.ii ; -f.tt"), target("+f.it")));
  CHECK(realizes(seq("+f.ii ; +f.ff"), target("-f.if")));
  CHECK(realizes(seq("-f.cc ; -f.tt"), target("-f.it")));
  CHECK(realizes(seq("f.cc ; #2"), target("-f.tc")));
  CHECK(realizes_axiomatic(seq("+f.if ; #3 ; +f.it"), target("-f.tc")));
}

TEST_CASE("unknown verdicts carry the resolved targets") {
  SearchOptions options;
  options.kmax = 1;
  const Verdict v = strict_bound(MethodSet::from_codes("cc"), options);
  CHECK(v.kind == Verdict::Kind::UnknownBeyond);
  CHECK(v.k == 1);
  CHECK(v.witnesses.size() == 5);
  for (const Witness& w : v.witnesses) CHECK(realizes(w.sequence, w.target));
}

TEST_CASE("every bound is strict and every witness holds on the thread route") {
  SearchOptions options;
  options.kmax = 6;
  for (const SweepEntry& e : sweep_subsets(canonical_base(), options, 1)) {
    if (e.verdict.kind != Verdict::Kind::Bound) continue;
    for (const Witness& w : e.verdict.witnesses) {
      CHECK(w.sequence.size() <= e.verdict.k);
      CHECK(realizes_axiomatic(w.sequence, w.target));
    }
    if (e.verdict.k > 1) {
      SearchOptions shorter = options;
      shorter.kmax = e.verdict.k - 1;
      const auto found = search_witnesses(e.methods, shorter);
      CHECK(std::any_of(found.begin(), found.end(), [](const auto& w) { return !w.has_value(); }));
    }
  }
}

TEST_CASE("certificates are never contradicted by search") {
  SearchOptions options;
  options.kmax = 6;
  for (MethodSet m : subsets_of(canonical_base())) {
    const auto found = search_witnesses(m, options);
    for (const Target& t : all_targets()) {
      if (incompleteness_certificate(m, t)) CHECK_FALSE(found[static_cast<std::size_t>(t.index())].has_value());
    }
  }
}

TEST_CASE("widening the jump-label cap changes no verdict") {
  SearchOptions narrow;
  narrow.kmax = 4;
  SearchOptions wide = narrow;
  wide.label_slack = 4;
  for (MethodSet m : subsets_of(canonical_base())) {
    const Verdict a = strict_bound(m, narrow);
    const Verdict b = strict_bound(m, wide);
    INFO(m.to_codes());
    CHECK(a.to_string() == b.to_string());
  }
}

TEST_CASE("search limits") {
  SearchOptions options;
  options.kmax = kMaxSearchLength + 1;
  CHECK_THROWS_AS(strict_bound(MethodSet::from_codes("cc"), options), Error);
}
