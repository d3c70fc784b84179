#include "boolreg/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "boolreg/analysis.hpp"
#include "boolreg/report.hpp"

namespace boolreg {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

CheckResult begin(int number, std::string id, std::string title) {
  CheckResult r;
  r.number = number;
  r.id = std::move(id);
  r.title = std::move(title);
  r.passed = true;
  return r;
}

void fail(CheckResult& r, std::string what) {
  r.passed = false;
  r.failures.push_back(std::move(what));
}

std::string braces(MethodSet m) { return "{" + m.to_codes() + "}"; }

// ---- 1. classes -----------------------------------------------------------

// Reference listing, representative first.
const std::vector<std::vector<const char*>>& reference_classes() {
  static const std::vector<std::vector<const char*>> listing = {
      {"+f.ff", "-f.tf"},
      {"-f.tt", "+f.ft"},
      {"-f.ti", "+f.fi"},
      {"-f.tc", "+f.fc"},
      {"f.ff", "+f.tf", "-f.ff", "f.tf", "f.if", "f.cf"},
      {"f.tt", "+f.tt", "-f.ft", "f.ft", "f.it", "f.ct"},
      {"f.ii", "+f.ti", "-f.fi", "f.fi", "f.ti", "f.ci"},
      {"f.cc", "+f.tc", "-f.fc", "f.fc", "f.tc", "f.ic"},
      {"+f.if", "-f.cf"},
      {"+f.it", "-f.ct"},
      {"+f.ii", "-f.ci"},
      {"-f.cc", "+f.ic"},
      {"-f.if", "+f.cf"},
      {"-f.it", "+f.ct"},
      {"-f.ii", "+f.ci"},
      {"+f.cc", "-f.ic"},
  };
  return listing;
}

}  // namespace

CheckResult check_classes(const CheckConfig&) {
  CheckResult r = begin(1, "classes", "16 effect classes match the reference listing");
  const auto classes = equivalence_classes(search_focus());
  const auto& listing = reference_classes();
  if (classes.size() != listing.size()) {
    fail(r, "expected 16 classes, got " + std::to_string(classes.size()));
    return r;
  }
  std::multiset<std::size_t> sizes;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    sizes.insert(classes[i].members.size());
    const std::string rep = render_instruction(classes[i].representative);
    if (rep != listing[i].front()) {
      fail(r, "class " + std::to_string(i + 1) + ": representative " + rep + ", expected " +
                  listing[i].front());
    }
    std::set<Instruction> want;
    for (const char* text : listing[i]) want.insert(parse_instruction(text));
    const std::set<Instruction> got(classes[i].members.begin(), classes[i].members.end());
    if (want != got) fail(r, "class " + std::to_string(i + 1) + " (" + rep + "): membership differs");
  }
  const std::multiset<std::size_t> expected = {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 6, 6, 6, 6};
  if (sizes != expected) fail(r, "size multiset differs from {2 x 12, 6 x 4}");
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  if (total != 48) fail(r, "classes cover " + std::to_string(total) + " instructions, not 48");
  r.detail = std::to_string(classes.size()) + " classes over " + std::to_string(total) + " instructions";
  return r;
}

// ---- 2. axiom system ------------------------------------------------------

CheckResult check_axiom_system(const CheckConfig&) {
  CheckResult r = begin(2, "axioms", "equivalence axioms are sound and complete");
  const AxiomReport report = check_axioms();
  for (const std::string& v : report.violations) fail(r, "unsound instance: " + v);
  if (!report.closure_matches_partition) {
    fail(r, "closure has " + std::to_string(report.closure_classes) +
                " classes and does not match the computed partition");
  }
  r.detail = std::to_string(report.instances) + " ground instances, " +
             std::to_string(report.violations.size()) + " violated, closure " +
             std::to_string(report.closure_classes) + " classes";
  return r;
}

// ---- 3. minimal sets ------------------------------------------------------

CheckResult check_minimal_sets(const CheckConfig&) {
  CheckResult r = begin(3, "minimal-sets", "256 minimal method sets of size 8");
  const auto sets = minimal_method_sets();

  // Direct oracle: every mask that hits all classes and loses that property
  // when any single method is dropped.
  const auto classes = equivalence_classes(search_focus());
  std::vector<std::uint16_t> class_masks;
  for (const auto& c : classes) {
    std::uint16_t mask = 0;
    for (const Instruction& u : c.members) mask |= static_cast<std::uint16_t>(1u << u.method().index());
    class_masks.push_back(mask);
  }
  auto hits = [&](std::uint32_t m) {
    return std::all_of(class_masks.begin(), class_masks.end(),
                       [&](std::uint16_t c) { return (c & m) != 0; });
  };
  std::set<std::uint16_t> oracle;
  for (std::uint32_t m = 1; m < 0x10000; ++m) {
    if (!hits(m)) continue;
    bool minimal = true;
    for (int b = 0; b < 16 && minimal; ++b) {
      if ((m & (1u << b)) && hits(m & ~(1u << b))) minimal = false;
    }
    if (minimal) oracle.insert(static_cast<std::uint16_t>(m));
  }

  std::set<std::uint16_t> got;
  for (MethodSet m : sets) {
    got.insert(m.mask());
    if (m.size() != 8) fail(r, braces(m) + " has size " + std::to_string(m.size()));
  }
  if (sets.size() != 256) fail(r, "expected 256 sets, got " + std::to_string(sets.size()));
  if (got != oracle) fail(r, "sets differ from the direct enumeration");
  if (!got.contains(canonical_base().mask())) fail(r, "canonical set " + braces(canonical_base()) + " missing");
  r.detail = std::to_string(sets.size()) + " sets, direct enumeration " + std::to_string(oracle.size());
  return r;
}

// ---- 4. strict bounds -----------------------------------------------------

namespace {

struct ExpectedBound {
  const char* methods;
  std::uint32_t k;
};

constexpr ExpectedBound kReferenceBounds[] = {
    {"ff,tt,ii,cc,if,it,ti,tc", 1}, {"ff,tt,ii,cc,if,it", 2}, {"ff,tt,ii,cc", 3},
    {"ff,tt,ii", 4},                {"cc", 3},                {"if,it", 4},
};

}  // namespace

CheckResult check_strict_bounds(const CheckConfig& config) {
  CheckResult r = begin(4, "strict-bounds", "strict bounds of the six reference sets");
  SearchOptions options;
  options.kmax = config.bound_kmax;
  std::ostringstream detail;
  for (const ExpectedBound& e : kReferenceBounds) {
    const MethodSet m = MethodSet::from_codes(e.methods);
    const Verdict v = strict_bound(m, options);
    detail << braces(m) << " " << v.to_string() << "; ";
    if (v.kind != Verdict::Kind::Bound || v.k != e.k) {
      fail(r, braces(m) + ": expected bound " + std::to_string(e.k) + ", got " + v.to_string());
    }
    if (v.kind != Verdict::Kind::Bound) continue;
    for (const Witness& w : v.witnesses) {
      if (w.sequence.size() > v.k || !realizes_axiomatic(w.sequence, w.target)) {
        fail(r, braces(m) + ": witness " + render_sequence(w.sequence) + " for " + w.target.code() +
                    " fails the thread-route check");
      }
    }
    if (v.k > 1) {
      SearchOptions shorter = options;
      shorter.kmax = v.k - 1;
      const auto found = search_witnesses(m, shorter);
      const bool strict = std::any_of(found.begin(), found.end(), [](const auto& w) { return !w; });
      if (!strict) fail(r, braces(m) + ": every target already has a witness of length " + std::to_string(v.k - 1));
    }
  }
  r.detail = detail.str();
  if (r.detail.size() >= 2) r.detail.resize(r.detail.size() - 2);
  return r;
}

// ---- 5. fixtures ----------------------------------------------------------

CheckResult check_fixtures(const CheckConfig& config) {
  CheckResult r = begin(5, "fixtures", "every reference witness realizes its target within its bound");
  std::size_t items = 0;
  std::vector<std::string> parts;
  for (const FixtureCheck& c : verify_fixtures(config.fixtures)) {
    if (c.id.starts_with("thm3-fixture-")) ++items;
    else parts.push_back(c.id + ": " + c.detail);
    if (!c.passed) fail(r, c.id + ": " + c.detail);
  }
  std::ostringstream detail;
  detail << items << " items audited";
  for (const std::string& p : parts) detail << "; " << p;
  r.detail = detail.str();
  return r;
}

// ---- 6. corollary ---------------------------------------------------------

CheckResult check_corollary3(const CheckConfig& config) {
  CheckResult r = begin(6, "corollary", "two-condition corollary over subsets of {ff,tt,ii,cc,if,it}");
  const CorollaryReport report = corollary3_check(config.corollary_kmax, config.jobs);
  for (const std::string& m : report.mismatches) fail(r, m);
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  for (const CorollaryEntry& e : report.entries) (e.condition == 1 ? c1 : c2) += 1;
  std::ostringstream detail;
  detail << "covered " << report.covered << " sets (condition 1: " << c1 << ", condition 2: " << c2
         << "), stated " << report.stated;
  if (!report.count_matches()) {
    detail << "; count discrepancy of " << static_cast<long>(report.stated) - static_cast<long>(report.covered);
  }
  detail << "; " << report.entries.size() - report.mismatches.size() << " of " << report.entries.size()
         << " verdicts as predicted";
  r.detail = detail.str();
  return r;
}

// ---- 7. rewrite property --------------------------------------------------

namespace {

InstructionSeq random_sequence(Rng& rng, std::size_t length, const std::vector<Focus>& foci,
                               MethodSet methods) {
  const std::vector<Method> ms = methods.methods();
  constexpr InstrKind kinds[] = {InstrKind::Plain, InstrKind::PosTest, InstrKind::NegTest};
  std::vector<Instruction> items;
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t roll = pick(rng, 10);
    if (roll < 7) {
      items.push_back(Instruction::basic(kinds[pick(rng, 3)], foci[pick(rng, foci.size())],
                                         ms[pick(rng, ms.size())]));
    } else if (roll < 9) {
      items.push_back(Instruction::jump(static_cast<std::uint32_t>(pick(rng, length - i + 2))));
    } else {
      items.push_back(Instruction::halt());
    }
  }
  return InstructionSeq(std::move(items));
}

}  // namespace

// A test directly followed by an instruction whose image is longer than one
// instruction: skipping the next instruction then lands inside its image.
bool test_before_expansion(const InstructionSeq& x, const TranslationMap& psi) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i].is_test() && psi.image(x[i + 1]).size() > 1) return true;
  }
  return false;
}

CheckResult check_rewrite_property(const CheckConfig& config) {
  CheckResult r = begin(7, "rewrite", "translated sequences keep their meaning and length bound");
  Rng rng(config.seed + 7);
  const TranslationMap psi = fixture_map(2);
  const std::vector<Focus> foci = {Focus("f"), Focus("g")};
  constexpr std::size_t kCases = 1000;
  constexpr std::size_t k = 3;
  constexpr std::size_t kListed = 5;
  std::size_t replaced = 0;
  std::size_t axiomatic = 0;
  std::size_t inequivalent = 0;
  std::size_t pattern = 0;
  std::size_t pattern_failed = 0;
  std::size_t other_failed = 0;
  for (std::size_t n = 0; n < kCases; ++n) {
    const InstructionSeq x = random_sequence(rng, 1 + pick(rng, 12), foci, MethodSet::all());
    const InstructionSeq y = rewrite_psi_prime(x, psi);
    const std::size_t p = count_replaced(x, psi);
    replaced += p;
    const std::string tag = "case " + std::to_string(n) + " " + render_sequence(x);
    const bool hazard = test_before_expansion(x, psi);
    pattern += hazard;
    bool same = feqv(y, x, foci);
    if (n % 10 == 0) {
      ++axiomatic;
      if (feqv_axiomatic(y, x, foci) != same) fail(r, tag + ": thread route disagrees with the interpreter");
    }
    if (!same) {
      ++inequivalent;
      (hazard ? pattern_failed : other_failed) += 1;
      if (inequivalent <= kListed) fail(r, tag + ": not functionally equivalent to " + render_sequence(y));
    }
    if (y.size() > x.size() + (k - 1) * p) {
      fail(r, tag + ": length " + std::to_string(y.size()) + " over the bound");
    }
  }
  if (inequivalent > kListed) {
    fail(r, std::to_string(inequivalent - kListed) + " further inequivalent cases");
  }
  std::ostringstream detail;
  detail << kCases << " sequences, " << replaced << " instructions replaced, " << axiomatic
         << " also on the thread route; " << inequivalent << " inequivalent (" << pattern_failed << " of "
         << pattern << " with a test directly before an expanded instruction, " << other_failed << " of "
         << kCases - pattern << " without)";
  r.detail = detail.str();
  return r;
}

// ---- 8. search oracle -----------------------------------------------------

CheckResult check_search_oracle(const CheckConfig& config) {
  CheckResult r = begin(8, "search-oracle", "deduplicated search agrees with naive enumeration");
  Rng rng(config.seed + 8);
  std::map<std::string, std::size_t> kinds;
  for (int n = 0; n < 20; ++n) {
    const MethodSet m(static_cast<std::uint16_t>(1 + pick(rng, 0xFFFF)));
    SearchOptions fast;
    fast.kmax = 3;
    SearchOptions slow = fast;
    slow.strategy = SearchStrategy::Naive;
    const Verdict a = strict_bound(m, fast);
    const Verdict b = strict_bound(m, slow);
    ++kinds[a.to_string().substr(0, a.to_string().find(' '))];
    bool same = a.kind == b.kind && a.k == b.k && a.target == b.target &&
                a.certificate == b.certificate && a.witnesses.size() == b.witnesses.size();
    for (std::size_t i = 0; same && i < a.witnesses.size(); ++i) {
      same = a.witnesses[i].target == b.witnesses[i].target &&
             a.witnesses[i].sequence.size() == b.witnesses[i].sequence.size();
    }
    if (!same) fail(r, braces(m) + ": " + a.to_string() + " vs " + b.to_string());
  }
  std::ostringstream detail;
  detail << "20 sets at kmax 3";
  for (const auto& [kind, count] : kinds) detail << ", " << kind << ": " << count;
  r.detail = detail.str();
  return r;
}

// ---- 9. semantics ---------------------------------------------------------

namespace {

const std::vector<Focus>& test_foci() {
  static const std::vector<Focus> foci = {Focus("f"), Focus("g"), Focus("h")};
  return foci;
}

ServiceState random_state(Rng& rng) {
  if (coin(rng, 0.2)) return ServiceState::empty();
  const MethodSet m = coin(rng) ? MethodSet::all()
                                : MethodSet(static_cast<std::uint16_t>(pick(rng, 0x10000)));
  return ServiceState::reg(coin(rng), m);
}

ServiceFamily random_family(Rng& rng) {
  ServiceFamily u;
  for (const Focus& f : test_foci()) {
    if (coin(rng)) u = u.with(f, random_state(rng));
  }
  return u;
}

std::set<Focus> random_foci(Rng& rng) {
  std::set<Focus> out;
  for (const Focus& f : test_foci()) {
    if (coin(rng)) out.insert(f);
  }
  return out;
}

Method random_method(Rng& rng) { return Method::from_index(static_cast<int>(pick(rng, 16))); }

Thread random_thread(Rng& rng, int depth) {
  if (depth == 0 || coin(rng, 0.2)) return coin(rng) ? Thread::stop() : Thread::dead_end();
  const BasicAction a{test_foci()[pick(rng, 3)], random_method(rng)};
  return Thread::post(a, random_thread(rng, depth - 1), random_thread(rng, depth - 1));
}

struct AxiomTally {
  std::map<std::string, std::size_t> instances;
  std::map<std::string, std::size_t> violations;
};

void tally(AxiomTally& t, CheckResult& r, const std::string& axiom, bool holds) {
  ++t.instances[axiom];
  if (holds) return;
  if (t.violations[axiom]++ < 3) fail(r, axiom + " instance " + std::to_string(t.instances[axiom]) + " fails");
}

std::string reply_axiom(const char* prefix, Reply reply) {
  const int base = reply == Reply::True ? 4 : reply == Reply::False ? 5 : 6;
  return std::string(prefix) + std::to_string(base);
}

}  // namespace

CheckResult check_semantics_axioms(const CheckConfig& config) {
  CheckResult r = begin(9, "semantics", "service-family, use and apply axioms; interpreter agreement");
  Rng rng(config.seed + 9);
  AxiomTally t;
  constexpr std::size_t kInstances = 200;

  for (std::size_t n = 0; n < kInstances; ++n) {
    const ServiceFamily u = random_family(rng);
    const ServiceFamily v = random_family(rng);
    const ServiceFamily w = random_family(rng);
    const Focus& f = test_foci()[pick(rng, 3)];
    const ServiceState z = random_state(rng);
    const ServiceState z2 = random_state(rng);
    tally(t, r, "SFC1", family_compose(u, ServiceFamily()) == u);
    tally(t, r, "SFC2", family_compose(u, v) == family_compose(v, u));
    tally(t, r, "SFC3", family_compose(family_compose(u, v), w) == family_compose(u, family_compose(v, w)));
    tally(t, r, "SFC4", family_compose(ServiceFamily::singleton(f, z), ServiceFamily::singleton(f, z2)) ==
                            ServiceFamily::singleton(f, ServiceState::empty()));

    std::set<Focus> fs = random_foci(rng);
    tally(t, r, "SFE1", encapsulate(fs, ServiceFamily()) == ServiceFamily());
    std::set<Focus> with_f = fs;
    with_f.insert(f);
    tally(t, r, "SFE2", encapsulate(with_f, ServiceFamily::singleton(f, z)) == ServiceFamily());
    std::set<Focus> without_f = fs;
    without_f.erase(f);
    tally(t, r, "SFE3", encapsulate(without_f, ServiceFamily::singleton(f, z)) == ServiceFamily::singleton(f, z));
    tally(t, r, "SFE4", encapsulate(fs, family_compose(u, v)) ==
                            family_compose(encapsulate(fs, u), encapsulate(fs, v)));

    const Thread x = random_thread(rng, 3);
    const Thread y = random_thread(rng, 3);
    tally(t, r, "AU1", use(Thread::stop(), u) == Thread::stop());
    tally(t, r, "AU2", use(Thread::dead_end(), u) == Thread::dead_end());
    tally(t, r, "A1", apply(Thread::stop(), u) == u);
    tally(t, r, "A2", apply(Thread::dead_end(), u) == ServiceFamily());

    const Method m = random_method(rng);
    const Thread post = Thread::post({f, m}, x, y);
    const ServiceFamily rest = encapsulate({f}, u);
    tally(t, r, "AU3", use(post, rest) == Thread::post({f, m}, use(x, rest), use(y, rest)));
    tally(t, r, "A3", apply(post, rest) == ServiceFamily());
  }

  // AU4-6 and A4-6 by reply; draw until each has enough instances.
  const std::vector<std::string> reply_axioms = {"AU4", "AU5", "AU6", "A4", "A5", "A6"};
  auto short_of = [&] {
    return std::any_of(reply_axioms.begin(), reply_axioms.end(),
                       [&](const std::string& a) { return t.instances[a] < kInstances; });
  };
  for (std::size_t guard = 0; short_of() && guard < 100000; ++guard) {
    const ServiceFamily u = random_family(rng);
    const Focus& f = test_foci()[pick(rng, 3)];
    const ServiceState s = random_state(rng);
    const Method m = random_method(rng);
    const Thread x = random_thread(rng, 3);
    const Thread y = random_thread(rng, 3);
    const Thread post = Thread::post({f, m}, x, y);
    const ServiceFamily rest = encapsulate({f}, u);
    const ServiceFamily before = family_compose(ServiceFamily::singleton(f, s), rest);
    const auto [reply, next] = service_step(s, m);
    const ServiceFamily after = family_compose(ServiceFamily::singleton(f, next), rest);
    const std::string au = reply_axiom("AU", reply);
    const std::string a = reply_axiom("A", reply);
    if (t.instances[au] >= kInstances) continue;
    switch (reply) {
      case Reply::True:
        tally(t, r, au, use(post, before) == use(x, after));
        tally(t, r, a, apply(post, before) == apply(x, after));
        break;
      case Reply::False:
        tally(t, r, au, use(post, before) == use(y, after));
        tally(t, r, a, apply(post, before) == apply(y, after));
        break;
      case Reply::Div:
        tally(t, r, au, use(post, before) == Thread::dead_end());
        tally(t, r, a, apply(post, before) == ServiceFamily());
        break;
    }
  }

  for (std::size_t n = 0; n < kInstances; ++n) {
    const std::vector<Focus> foci = {Focus("f"), Focus("g")};
    const InstructionSeq a = random_sequence(rng, 1 + pick(rng, 5), foci, MethodSet::all());
    const InstructionSeq b = random_sequence(rng, 1 + pick(rng, 5), foci, MethodSet::all());
    const InstructionSeq c = random_sequence(rng, 1 + pick(rng, 5), foci, MethodSet::all());
    const InstructionSeq left = a.concat(b).concat(c);
    const InstructionSeq right = a.concat(b.concat(c));
    tally(t, r, "PGA1", left == right && thread_extract(left) == thread_extract(right));
  }

  for (const char* axiom : {"SFC1", "SFC2", "SFC3", "SFC4", "SFE1", "SFE2", "SFE3", "SFE4", "AU1", "AU2",
                            "AU3", "AU4", "AU5", "AU6", "A1", "A2", "A3", "A4", "A5", "A6", "PGA1"}) {
    if (t.instances[axiom] < kInstances) {
      fail(r, std::string(axiom) + ": only " + std::to_string(t.instances[axiom]) + " instances");
    }
  }

  // Exhaustive agreement of the positional interpreter with thread
  // extraction followed by use and apply.
  const Focus f("f");
  const Focus g("g");
  const MethodSet four = MethodSet::from_codes("ff,tt,ii,cc");
  std::vector<Instruction> alphabet;
  for (Method m : four.methods()) {
    alphabet.push_back(Instruction::plain(f, m));
    alphabet.push_back(Instruction::pos_test(f, m));
    alphabet.push_back(Instruction::neg_test(f, m));
  }
  for (std::uint32_t l = 0; l <= 3; ++l) alphabet.push_back(Instruction::jump(l));
  alphabet.push_back(Instruction::halt());
  const MethodSet all = MethodSet::all();
  const std::vector<ServiceFamily> families = {
      ServiceFamily::singleton(f, ServiceState::reg(false, all)),
      ServiceFamily::singleton(f, ServiceState::reg(true, all)),
      ServiceFamily::singleton(f, ServiceState::reg(false, MethodSet::from_codes("ff,ii"))),
      ServiceFamily::singleton(f, ServiceState::reg(true, MethodSet::from_codes("tt,cc"))),
      ServiceFamily::singleton(f, ServiceState::empty()),
      ServiceFamily(),
      ServiceFamily::singleton(g, ServiceState::reg(true, all)),
  };
  std::size_t runs = 0;
  std::size_t mismatches = 0;
  std::vector<std::size_t> digits;
  for (std::size_t len = 1; len <= 5; ++len) {
    digits.assign(len, 0);
    while (true) {
      std::vector<Instruction> items;
      items.reserve(len);
      for (std::size_t d : digits) items.push_back(alphabet[d]);
      const InstructionSeq seq(std::move(items));
      const Thread th = thread_extract(seq);
      for (const ServiceFamily& u : families) {
        ++runs;
        const RunResult fast = run_positional(seq, u);
        const Thread residual = use(th, u);
        const Termination term = residual.is_stop()       ? Termination::Terminated
                                 : residual.is_dead_end() ? Termination::Deadlocked
                                                          : Termination::Suspended;
        if (fast.termination != term || fast.family != apply(th, u)) {
          if (mismatches++ < 3) fail(r, "interpreters disagree on " + render_sequence(seq));
        }
      }
      std::size_t pos = len;
      while (pos > 0 && ++digits[pos - 1] == alphabet.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  if (mismatches > 0) fail(r, std::to_string(mismatches) + " interpreter disagreements in total");

  std::ostringstream detail;
  detail << t.instances.size() << " axioms x >= " << kInstances << " instances, "
         << runs << " exhaustive interpreter runs";
  r.detail = detail.str();
  return r;
}

// ---- 10. sweep ------------------------------------------------------------

CheckResult check_sweep(const CheckConfig& config) {
  CheckResult r = begin(10, "sweep", "all 255 subsets of the canonical set classified");
  SearchOptions options;
  options.kmax = config.sweep_kmax;
  const MethodSet base = canonical_base();
  const auto first = sweep_subsets(base, options, config.jobs);
  const auto second = sweep_subsets(base, options, 1);
  const std::string a = sweep_json(base, options, first).dump(2);
  const std::string b = sweep_json(base, options, second).dump(2);
  if (a != b) fail(r, "reports differ between runs");
  if (first.size() != 255) fail(r, "expected 255 subsets, got " + std::to_string(first.size()));

  for (const SweepEntry& e : first) {
    const Verdict& v = e.verdict;
    if (v.kind == Verdict::Kind::UnknownBeyond) fail(r, "unresolved: " + braces(e.methods) + " " + v.to_string());
    if (v.kind == Verdict::Kind::CertifiedIncomplete) {
      SearchOptions full = options;
      const auto found = search_witnesses(e.methods, full, {v.target->index()});
      if (found[static_cast<std::size_t>(v.target->index())]) {
        fail(r, braces(e.methods) + ": certified target " + v.target->code() + " has a witness");
      }
    }
    if (v.kind == Verdict::Kind::Bound) {
      for (const Witness& w : v.witnesses) {
        if (!realizes_axiomatic(w.sequence, w.target)) {
          fail(r, braces(e.methods) + ": witness for " + w.target.code() + " fails the thread route");
        }
      }
    }
  }
  auto verdict_of = [&](const char* codes) {
    const MethodSet m = MethodSet::from_codes(codes);
    for (const SweepEntry& e : first) {
      if (e.methods == m) return e.verdict;
    }
    return Verdict{};
  };
  if (const Verdict v = verdict_of("ff,tt,ii,cc,if,it,ti,tc"); v.kind != Verdict::Kind::Bound || v.k != 1) {
    fail(r, "canonical set: " + v.to_string());
  }
  if (const Verdict v = verdict_of("cc"); v.kind != Verdict::Kind::Bound || v.k != 3) fail(r, "{cc}: " + v.to_string());
  if (verdict_of("ff").kind != Verdict::Kind::CertifiedIncomplete) fail(r, "{ff} not certified incomplete");

  const SweepSummary s = summarize_sweep(first);
  std::ostringstream detail;
  detail << first.size() << " subsets at kmax " << options.kmax;
  for (std::size_t k = 1; k < s.bound_counts.size(); ++k) {
    if (s.bound_counts[k] > 0) detail << ", bound " << k << ": " << s.bound_counts[k];
  }
  detail << ", incomplete: " << s.incomplete << ", unknown: " << s.unknown << ", second run identical: "
         << (a == b ? "yes" : "no");
  r.detail = detail.str();
  return r;
}

// ---- suite ----------------------------------------------------------------

const std::vector<CheckSpec>& acceptance_checks() {
  static const std::vector<CheckSpec> specs = {
      {1, "classes", check_classes},
      {2, "axioms", check_axiom_system},
      {3, "minimal-sets", check_minimal_sets},
      {4, "strict-bounds", check_strict_bounds},
      {5, "fixtures", check_fixtures},
      {6, "corollary", check_corollary3},
      {7, "rewrite", check_rewrite_property},
      {8, "search-oracle", check_search_oracle},
      {9, "semantics", check_semantics_axioms},
      {10, "sweep", check_sweep},
  };
  return specs;
}

namespace {

double limit_for(int number) {
  switch (number) {
    case 1: case 2: case 3: return 1;
    case 4: return 60;
    case 5: return 5;
    case 6: return 600;
    case 7: return 60;
    case 8: case 9: return 120;
    case 10: return 1800;
  }
  return 0;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const CheckConfig& config, const std::vector<int>& only,
                                        const std::function<void(const CheckResult&)>& progress) {
  std::vector<CheckResult> out;
  for (const CheckSpec& spec : acceptance_checks()) {
    if (!only.empty() && std::find(only.begin(), only.end(), spec.number) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = spec.run(config);
    } catch (const std::exception& e) {
      r = begin(spec.number, spec.id, spec.id);
      r.passed = false;
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.limit_seconds = limit_for(spec.number);
    if (r.seconds > r.limit_seconds) {
      r.passed = false;
      r.failures.push_back("took " + std::to_string(r.seconds) + " s, limit " +
                           std::to_string(r.limit_seconds) + " s");
    }
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace boolreg
