#include <doctest.h>

#include <random>

#include "boolreg/equivalence.hpp"
#include "boolreg/translation.hpp"

using namespace boolreg;

namespace {

InstructionSeq seq(const char* text) { return parse_sequence(text); }

const FixtureItem& item(const std::vector<FixtureItem>& items, const std::string& id) {
  return *std::find_if(items.begin(), items.end(), [&](const FixtureItem& i) { return i.id == id; });
}

}  // namespace

TEST_CASE("fixture table") {
  const auto items = fixture_items();
  CHECK(items.size() == 61);
  CHECK(render_sequence(item(items, "c1").witness) == "+f.ii ; +f.ff ; +f.ff");
  CHECK(render_instruction(item(items, "c1").key) == "+f.if");
  CHECK(render_sequence(item(items, "ab4").witness) == "+f.it ; -f.if ; #1 ; #2");
  CHECK(realizes(item(items, "c1").witness, Target::of(item(items, "c1").key)));
  CHECK(realizes(item(items, "ab4").witness, Target::of(item(items, "ab4").key)));
  CHECK(realizes(item(items, "o").witness, Target::of(parse_instruction("f.ii"))));
  for (const FixtureItem& i : items) {
    INFO(i.id);
    CHECK(realizes(i.witness, Target::of(i.key)));
    CHECK(realizes_axiomatic(i.witness, Target::of(i.key)));
  }
}

TEST_CASE("fixture maps") {
  const auto maps = theorem3_fixtures();
  REQUIRE(maps.size() == 5);
  CHECK(maps.at(1).size() == 1);
  CHECK(maps.at(2).size() == 256);
  CHECK(maps.at(3).size() == 16);
  CHECK(maps.at(4).size() == 1);
  CHECK(maps.at(5).size() == 16384);
  for (const FixtureCheck& c : verify_fixtures(fixture_items())) {
    INFO(c.id << ": " << c.detail);
    CHECK(c.passed);
  }
  CHECK(fixture_map(2).max_length() == 3);
  CHECK(fixture_map(5).max_length() == 4);
  CHECK_THROWS_AS(fixture_map(6), Error);
}

TEST_CASE("a corrupted fixture is named") {
  auto items = fixture_items();
  auto it = std::find_if(items.begin(), items.end(), [](const FixtureItem& i) { return i.id == "b"; });
  it->witness = seq("f.cc ; #3");
  bool named = false;
  for (const FixtureCheck& c : verify_fixtures(items)) {
    if (c.id == "thm3-fixture-b") {
      named = true;
      CHECK_FALSE(c.passed);
    }
  }
  CHECK(named);
}

TEST_CASE("translation maps") {
  const TranslationMap psi = fixture_map(2);
  CHECK(psi.entries().size() == 48);
  CHECK(psi.image(parse_instruction("f.ii")) == seq("f.ii"));
  CHECK(psi.image(parse_instruction("-f.tc")) == seq("f.cc ; #2"));
  CHECK(psi.image(parse_instruction("-g.tc")) == seq("g.cc ; #2"));
  CHECK(psi.image(parse_instruction("+f.tf")) == seq("f.ff"));
  CHECK(psi.image(Instruction::jump(4)) == seq("#4"));
  for (const auto& [key, image] : psi.entries()) CHECK(realizes(image, Target::of(key)));

  const TranslationMap partial = TranslationMap::build(MethodSet::from_codes("cc"), {});
  CHECK_FALSE(partial.has_image(parse_instruction("f.ff")));
  CHECK(partial.has_image(parse_instruction("+f.cc")));
  CHECK_THROWS_AS(partial.image(parse_instruction("f.ff")), MissingMapping);
  CHECK_THROWS_AS(rewrite_psi_prime(seq("f.ff ; !"), partial), MissingMapping);
}

TEST_CASE("rewriting") {
  const TranslationMap psi = fixture_map(2);
  CHECK(rewrite_psi_prime(seq("#2 ; -f.tc ; !"), psi) == seq("#3 ; f.cc ; #2 ; !"));
  CHECK(feqv(seq("#2 ; -f.tc ; !"), seq("#3 ; f.cc ; #2 ; !"), {Focus("f")}));
  const InstructionSeq native = seq("+f.ii ; #2 ; f.cc ; -f.tt ; ! ; #0");
  CHECK(rewrite_psi_prime(native, psi) == native);
  CHECK(count_replaced(native, psi) == 0);
  CHECK(count_replaced(seq("-f.tc ; f.if ; f.ii ; #1"), psi) == 2);
  CHECK(rewrite_psi_prime(seq("#9 ; f.if"), psi) == seq("#9 ; f.ff"));
}

TEST_CASE("a test directly before an expanded instruction breaks the rewrite") {
  // Skipping one instruction lands inside the expansion of +g.if.
  const InstructionSeq x = seq("+f.cc ; +g.if ; !");
  const InstructionSeq y = rewrite_psi_prime(x, fixture_map(2));
  CHECK(y == seq("+f.cc ; +g.ii ; +g.ff ; +g.ff ; !"));
  CHECK_FALSE(feqv(x, y, {Focus("f"), Focus("g")}));
  CHECK_FALSE(feqv_axiomatic(x, y, {Focus("f"), Focus("g")}));
}

TEST_CASE("rewriting preserves meaning when no test precedes an expansion") {
  std::mt19937_64 rng(0xB00);
  const TranslationMap psi = fixture_map(2);
  const std::vector<Focus> foci = {Focus("f"), Focus("g")};
  std::vector<Instruction> basics;
  for (const Focus& f : foci) {
    for (const Instruction& u : enumerate_instructions(MethodSet::all(), f)) basics.push_back(u);
  }
  int tested = 0;
  while (tested < 500) {
    std::vector<Instruction> items;
    const std::size_t len = 1 + rng() % 12;
    for (std::size_t i = 0; i < len; ++i) {
      const auto roll = rng() % 10;
      if (roll < 7) items.push_back(basics[rng() % basics.size()]);
      else if (roll < 9) items.push_back(Instruction::jump(static_cast<std::uint32_t>(rng() % (len + 2))));
      else items.push_back(Instruction::halt());
    }
    bool hazard = false;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      hazard = hazard || (items[i].is_test() && psi.image(items[i + 1]).size() > 1);
    }
    if (hazard) continue;
    ++tested;
    const InstructionSeq x(items);
    const InstructionSeq y = rewrite_psi_prime(x, psi);
    INFO(render_sequence(x));
    CHECK(feqv(x, y, foci));
    CHECK(y.size() <= x.size() + 2 * count_replaced(x, psi));
  }
}
