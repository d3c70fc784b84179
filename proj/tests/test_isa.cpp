#include <doctest.h>

#include <random>

#include "boolreg/isa.hpp"

using namespace boolreg;

TEST_CASE("unary functions") {
  CHECK(apply_fn(UnaryFn::C, false));
  CHECK(apply_fn(UnaryFn::I, true));
  CHECK_FALSE(apply_fn(UnaryFn::F, true));
  CHECK(compose_fn(UnaryFn::C, UnaryFn::C) == UnaryFn::I);
  CHECK(compose_fn(UnaryFn::F, UnaryFn::C) == UnaryFn::F);
  CHECK(compose_fn(UnaryFn::C, UnaryFn::T) == UnaryFn::F);
}

TEST_CASE("composition agrees pointwise for all 16 pairs") {
  for (UnaryFn g : kUnaryFns) {
    for (UnaryFn f : kUnaryFns) {
      const UnaryFn h = compose_fn(g, f);
      for (bool b : {false, true}) CHECK(apply_fn(h, b) == apply_fn(g, apply_fn(f, b)));
    }
  }
}

TEST_CASE("method enumeration") {
  const auto ms = enumerate_methods();
  CHECK(ms.size() == 16);
  CHECK(ms.front() == Method{UnaryFn::F, UnaryFn::F});
  CHECK(Method{UnaryFn::C, UnaryFn::C}.index() == 15);
  for (int i = 0; i < 16; ++i) {
    CHECK(ms[static_cast<std::size_t>(i)].index() == i);
    CHECK(Method::from_code(ms[static_cast<std::size_t>(i)].code()) == ms[static_cast<std::size_t>(i)]);
  }
  CHECK(Method::from_code("tc") == Method{UnaryFn::T, UnaryFn::C});
  CHECK_THROWS_AS(Method::from_code("xx"), Error);
  CHECK_THROWS_AS(Method::from_code("f"), Error);
}

TEST_CASE("method sets") {
  const MethodSet m = MethodSet::from_codes("ff,tt,ii,cc");
  CHECK(m.size() == 4);
  CHECK(m.contains(Method::from_code("ii")));
  CHECK_FALSE(m.contains(Method::from_code("if")));
  CHECK(m.to_codes() == "ff,tt,ii,cc");
  CHECK(MethodSet::from_codes(" cc , ff ") == MethodSet::from_codes("ff,cc"));
  CHECK(m.is_subset_of(canonical_base()));
  CHECK(canonical_base().size() == 8);
  CHECK(MethodSet::all().size() == 16);
  CHECK_THROWS_AS(MethodSet::from_codes("ff,qq"), Error);
}

TEST_CASE("foci") {
  CHECK(Focus::is_valid("f"));
  CHECK(Focus::is_valid("reg12"));
  CHECK_FALSE(Focus::is_valid(""));
  CHECK_FALSE(Focus::is_valid("1f"));
  CHECK_FALSE(Focus::is_valid("F"));
  CHECK_THROWS_AS(Focus("A"), Error);
}

TEST_CASE("instruction enumeration") {
  const Focus f("f");
  CHECK(enumerate_instructions(MethodSet::all(), f).size() == 48);
  CHECK(enumerate_instructions(MethodSet(), f).empty());
  const Method ii = Method::from_code("ii");
  const auto three = enumerate_instructions(MethodSet{ii}, f);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Instruction::plain(f, ii));
  CHECK(three[1] == Instruction::pos_test(f, ii));
  CHECK(three[2] == Instruction::neg_test(f, ii));
  for (int n = 0; n < 16; ++n) {
    const MethodSet m(static_cast<std::uint16_t>((1u << n) | 1u));
    CHECK(enumerate_instructions(m, f).size() == 3 * static_cast<std::size_t>(m.size()));
  }
}

TEST_CASE("canonical instruction order") {
  const Focus f("f");
  const Method ff = Method::from_code("ff");
  CHECK(Instruction::jump(9) < Instruction::halt());
  CHECK(Instruction::halt() < Instruction::plain(f, ff));
  CHECK(Instruction::plain(f, Method::from_code("cc")) < Instruction::pos_test(f, ff));
  CHECK(Instruction::pos_test(f, Method::from_code("cc")) < Instruction::neg_test(f, ff));
  CHECK(Instruction::jump(1) < Instruction::jump(2));
}

TEST_CASE("parsing") {
  const InstructionSeq s = parse_sequence("+f.ii ; #2 ; !");
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Instruction::pos_test(Focus("f"), Method::from_code("ii")));
  CHECK(s[1] == Instruction::jump(2));
  CHECK(s[2] == Instruction::halt());
  CHECK(parse_sequence("f.cc") == InstructionSeq{Instruction::plain(Focus("f"), Method::from_code("cc"))});
  CHECK(parse_sequence("  -g2.tc;#0 ;!  ") == parse_sequence("-g2.tc ; #0 ; !"));
  CHECK(parse_sequence("#123456")[0].label() == 123456);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_sequence("(+f.ii)*"), UnsupportedRepetition);
  CHECK_THROWS_AS(parse_sequence("+f.ii ; !*"), UnsupportedRepetition);
  CHECK_THROWS_AS(parse_sequence(""), SyntaxError);
  CHECK_THROWS_AS(parse_sequence("f.ii ;"), SyntaxError);
  CHECK_THROWS_AS(parse_sequence("f.iq"), SyntaxError);
  CHECK_THROWS_AS(parse_sequence("#"), SyntaxError);
  CHECK_THROWS_AS(parse_sequence("#-1"), SyntaxError);
  CHECK_THROWS_AS(parse_sequence("F.ii"), SyntaxError);
  CHECK_THROWS_AS(parse_sequence("f.ii f.cc"), SyntaxError);
  try {
    parse_sequence("f.ii ; ?");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("rendering") {
  CHECK(render_sequence(InstructionSeq{Instruction::halt()}) == "!");
  const InstructionSeq s{Instruction::neg_test(Focus("f"), Method::from_code("tc")), Instruction::jump(2)};
  CHECK(render_sequence(s) == "-f.tc ; #2");
}

TEST_CASE("render then parse is the identity on random sequences") {
  std::mt19937_64 rng(0xB00);
  const std::vector<Focus> foci = {Focus("f"), Focus("g"), Focus("reg2")};
  const auto basics = [&] {
    std::vector<Instruction> out;
    for (const Focus& f : foci) {
      for (const Instruction& u : enumerate_instructions(MethodSet::all(), f)) out.push_back(u);
    }
    return out;
  }();
  for (int n = 0; n < 100; ++n) {
    const std::size_t len = 1 + rng() % 20;
    std::vector<Instruction> items;
    for (std::size_t i = 0; i < len; ++i) {
      const auto roll = rng() % 10;
      if (roll < 7) items.push_back(basics[rng() % basics.size()]);
      else if (roll < 9) items.push_back(Instruction::jump(static_cast<std::uint32_t>(rng() % 10)));
      else items.push_back(Instruction::halt());
    }
    const InstructionSeq s(std::move(items));
    CHECK(parse_sequence(render_sequence(s)) == s);
  }
}

TEST_CASE("concatenation is associative") {
  std::mt19937_64 rng(0xB01);
  const auto all = enumerate_instructions(MethodSet::all(), Focus("f"));
  auto random_seq = [&] {
    std::vector<Instruction> items;
    for (std::size_t i = 0, n = 1 + rng() % 5; i < n; ++i) items.push_back(all[rng() % all.size()]);
    return InstructionSeq(std::move(items));
  };
  for (int n = 0; n < 50; ++n) {
    const auto x = random_seq();
    const auto y = random_seq();
    const auto z = random_seq();
    CHECK(x.concat(y).concat(z) == x.concat(y.concat(z)));
  }
}

TEST_CASE("sequences are non-empty") {
  CHECK_THROWS_AS(InstructionSeq(std::vector<Instruction>{}), Error);
}

TEST_CASE("refocusing") {
  const Instruction u = parse_instruction("+f.ii");
  CHECK(render_instruction(u.with_focus(Focus("g"))) == "+g.ii");
  CHECK(Instruction::jump(3).with_focus(Focus("g")) == Instruction::jump(3));
  CHECK(parse_sequence("f.ii ; g.cc ; f.tt ; !").foci() == std::vector<Focus>{Focus("f"), Focus("g")});
}
