#include <doctest.h>

#include <chrono>
#include <random>

#include "boolreg/semantics.hpp"

using namespace boolreg;

namespace {

const Focus f("f");
const Focus g("g");
Method m(const char* code) { return Method::from_code(code); }
ServiceFamily reg(const Focus& at, bool b, MethodSet ms = MethodSet::all()) {
  return ServiceFamily::singleton(at, ServiceState::reg(b, ms));
}

}  // namespace

TEST_CASE("service steps") {
  auto [r1, s1] = service_step(ServiceState::reg(true, MethodSet::all()), m("cc"));
  CHECK(r1 == Reply::False);
  CHECK(s1 == ServiceState::reg(false, MethodSet::all()));
  auto [r2, s2] = service_step(ServiceState::reg(false, MethodSet{m("ii")}), m("tt"));
  CHECK(r2 == Reply::Div);
  CHECK(s2.is_empty());
  auto [r3, s3] = service_step(ServiceState::empty(), m("ff"));
  CHECK(r3 == Reply::Div);
  CHECK(s3.is_empty());
}

TEST_CASE("thread extraction") {
  CHECK(thread_extract(parse_sequence("!")) == Thread::stop());
  CHECK(thread_extract(parse_sequence("#0 ; !")) == Thread::dead_end());
  CHECK(thread_extract(parse_sequence("+f.ii ; ! ; !")) ==
        Thread::post({f, m("ii")}, Thread::stop(), Thread::stop()));
  CHECK(thread_extract(parse_sequence("f.ii")) == Thread::post({f, m("ii")}, Thread::dead_end(), Thread::dead_end()));
  CHECK(thread_extract(parse_sequence("-f.ii ; !")) ==
        Thread::post({f, m("ii")}, Thread::dead_end(), Thread::stop()));
  CHECK(thread_extract(parse_sequence("#3 ; f.ii ; f.cc ; !")) == Thread::stop());
  CHECK(thread_extract(parse_sequence("#1 ; #1 ; #0")) == Thread::dead_end());
  CHECK(thread_extract(parse_sequence("#5 ; !")) == Thread::dead_end());
  CHECK(thread_extract(parse_sequence("+f.ii ; #2 ; f.cc ; !")) ==
        Thread::post({f, m("ii")}, Thread::stop(), Thread::post({f, m("cc")}, Thread::stop(), Thread::stop())));
}

TEST_CASE("thread extraction of long test chains is shared, not copied") {
  std::vector<Instruction> items;
  for (int i = 0; i < 60; ++i) items.push_back(Instruction::pos_test(f, m("ii")));
  items.push_back(Instruction::halt());
  const auto start = std::chrono::steady_clock::now();
  const Thread t = thread_extract(InstructionSeq(items));
  CHECK(t.depth() <= 61);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
  CHECK(use(t, reg(f, true)) == Thread::stop());
}

TEST_CASE("family composition") {
  const ServiceFamily u = reg(f, true);
  CHECK(family_compose(u, ServiceFamily()) == u);
  CHECK(family_compose(u, reg(f, false)) == ServiceFamily::singleton(f, ServiceState::empty()));
  CHECK(family_compose(reg(f, true), reg(g, false)) == family_compose(reg(g, false), reg(f, true)));
}

TEST_CASE("encapsulation") {
  const ServiceFamily u = family_compose(reg(f, true), reg(g, false));
  CHECK(encapsulate({f}, u) == reg(g, false));
  CHECK(encapsulate({}, u) == u);
  CHECK(encapsulate({f, g}, u) == ServiceFamily());
}

TEST_CASE("abstracting use") {
  CHECK(use(Thread::stop(), reg(f, false)) == Thread::stop());
  CHECK(use(Thread::post({f, m("ii")}, Thread::stop(), Thread::dead_end()), reg(f, true)) == Thread::stop());
  CHECK(use(Thread::post({f, m("ii")}, Thread::stop(), Thread::dead_end()), reg(f, false)) == Thread::dead_end());
  const Thread kept = Thread::post({g, m("ii")}, Thread::post({f, m("cc")}, Thread::stop(), Thread::stop()), Thread::dead_end());
  CHECK(use(kept, reg(f, false)) == Thread::post({g, m("ii")}, Thread::stop(), Thread::dead_end()));
  CHECK(use(Thread::post({f, m("tt")}, Thread::stop(), Thread::stop()), reg(f, false, MethodSet{m("ii")})) ==
        Thread::dead_end());
}

TEST_CASE("apply") {
  const ServiceFamily u = reg(f, false);
  CHECK(apply(Thread::stop(), u) == u);
  CHECK(apply(Thread::dead_end(), u) == ServiceFamily());
  CHECK(apply(Thread::post({f, m("cc")}, Thread::stop(), Thread::stop()), u) == reg(f, true));
  CHECK(apply(Thread::post({g, m("cc")}, Thread::stop(), Thread::stop()), u) == ServiceFamily());
}

TEST_CASE("positional runs") {
  const ServiceFamily u = reg(f, false);
  CHECK(run_positional(parse_sequence("!"), u) == RunResult{Termination::Terminated, u});
  CHECK(run_positional(parse_sequence("#0 ; !"), u) == RunResult{Termination::Deadlocked, ServiceFamily()});
  CHECK(run_positional(parse_sequence("f.cc ; !"), u) == RunResult{Termination::Terminated, reg(f, true)});
  CHECK(run_positional(parse_sequence("f.cc"), u).termination == Termination::Deadlocked);
  CHECK(run_positional(parse_sequence("+f.ii ; #0 ; !"), u).termination == Termination::Terminated);
  CHECK(run_positional(parse_sequence("-f.ii ; #0 ; !"), u).termination == Termination::Deadlocked);
  CHECK(run_positional(parse_sequence("g.cc ; !"), u).termination == Termination::Suspended);
  CHECK(run_positional(parse_sequence("g.cc ; !"), u).family == ServiceFamily());
}

namespace {

void expect_agreement(const InstructionSeq& seq, const ServiceFamily& u) {
  const RunResult fast = run_positional(seq, u);
  const RunResult slow = run_axiomatic(seq, u);
  INFO(render_sequence(seq));
  CHECK(fast.termination == slow.termination);
  CHECK(fast.family == slow.family);
}

}  // namespace

TEST_CASE("positional interpreter matches the thread route exhaustively on two foci") {
  const std::vector<Instruction> alphabet = {
      parse_instruction("f.ii"),  parse_instruction("+f.ii"), parse_instruction("-f.cc"),
      parse_instruction("g.tt"),  parse_instruction("+g.if"), Instruction::jump(0),
      Instruction::jump(1),       Instruction::jump(2),       Instruction::jump(3),
      Instruction::halt()};
  const std::vector<ServiceFamily> families = {
      family_compose(reg(f, false), reg(g, true)),
      family_compose(reg(f, true), reg(g, false, MethodSet{m("tt")})),
      reg(f, true),
      reg(g, false),
      ServiceFamily::singleton(f, ServiceState::empty()),
      ServiceFamily(),
  };
  std::size_t runs = 0;
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      std::vector<Instruction> items;
      for (std::size_t d : digits) items.push_back(alphabet[d]);
      const InstructionSeq seq(std::move(items));
      for (const ServiceFamily& u : families) {
        ++runs;
        const RunResult fast = run_positional(seq, u);
        const RunResult slow = run_axiomatic(seq, u);
        if (fast.termination != slow.termination || !(fast.family == slow.family)) expect_agreement(seq, u);
      }
      std::size_t pos = len;
      while (pos > 0 && ++digits[pos - 1] == alphabet.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  CHECK(runs == 6 * (10 + 100 + 1000 + 10000));
}

TEST_CASE("positional interpreter matches the thread route on random inputs") {
  std::mt19937_64 rng(0xB00);
  const std::vector<Focus> foci = {f, g};
  const auto all_f = enumerate_instructions(MethodSet::all(), f);
  const auto all_g = enumerate_instructions(MethodSet::all(), g);
  for (int n = 0; n < 1000; ++n) {
    std::vector<Instruction> items;
    const std::size_t len = 1 + rng() % 10;
    for (std::size_t i = 0; i < len; ++i) {
      const auto roll = rng() % 10;
      if (roll < 4) items.push_back(all_f[rng() % 48]);
      else if (roll < 7) items.push_back(all_g[rng() % 48]);
      else if (roll < 9) items.push_back(Instruction::jump(static_cast<std::uint32_t>(rng() % (len + 2))));
      else items.push_back(Instruction::halt());
    }
    ServiceFamily u;
    for (const Focus& at : foci) {
      const auto roll = rng() % 4;
      if (roll == 0) continue;
      if (roll == 1) u = u.with(at, ServiceState::empty());
      else u = u.with(at, ServiceState::reg(rng() % 2, MethodSet(static_cast<std::uint16_t>(rng()))));
    }
    const InstructionSeq seq(std::move(items));
    const RunResult fast = run_positional(seq, u);
    const RunResult slow = run_axiomatic(seq, u);
    if (fast.termination != slow.termination || !(fast.family == slow.family)) expect_agreement(seq, u);
  }
}
