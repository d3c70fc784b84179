#include "boolreg/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace boolreg {

Outcome Outcome::exit(std::uint32_t d, bool c) {
  if (d == 0) throw Error("exit offset must be positive");
  return {Kind::Exit, c, d};
}

std::string Outcome::to_string() const {
  switch (kind) {
    case Kind::Deadlock: return "deadlock";
    case Kind::Halted: return std::string("halt(") + (content ? "1" : "0") + ")";
    case Kind::Exit: break;
  }
  return "exit(" + std::to_string(offset) + "," + (content ? "1" : "0") + ")";
}

std::string EffectSummary::to_string() const {
  return "0:" + on0.to_string() + " 1:" + on1.to_string();
}

namespace {

void require_single_focus(const InstructionSeq& seq, const Focus& f) {
  for (const Instruction& u : seq) {
    if (u.is_basic() && u.focus_name() != f.name()) {
      throw ForeignFocus("instruction " + render_instruction(u) +
                         " does not use focus " + f.name());
    }
  }
}

Outcome run_register(const InstructionSeq& seq, bool input) {
  const std::size_t n = seq.size();
  bool content = input;
  std::size_t pc = 0;
  while (pc < n) {
    const Instruction& u = seq[pc];
    switch (u.kind()) {
      case InstrKind::Halt: return Outcome::halted(content);
      case InstrKind::Jump:
        if (u.label() == 0) return Outcome::deadlock();
        pc += u.label();
        continue;
      default: break;
    }
    const Method m = u.method();
    const bool reply = apply_fn(m.reply, content);
    content = apply_fn(m.transform, content);
    if (u.kind() == InstrKind::Plain) {
      pc += 1;
    } else if (u.kind() == InstrKind::PosTest) {
      pc += reply ? 1 : 2;
    } else {
      pc += reply ? 2 : 1;
    }
  }
  return Outcome::exit(static_cast<std::uint32_t>(pc - n + 1), content);
}

ServiceFamily full_register(const Focus& f, bool b) {
  return ServiceFamily::singleton(f, ServiceState::reg(b, MethodSet::all()));
}

}  // namespace

EffectSummary summarize(const InstructionSeq& seq, const Focus& f) {
  require_single_focus(seq, f);
  return {run_register(seq, false), run_register(seq, true)};
}

EffectSummary observe_summary(const InstructionSeq& seq, const Focus& f,
                              std::uint32_t max_halts) {
  require_single_focus(seq, f);
  auto observe = [&](bool b) {
    std::vector<Instruction> items = seq.items();
    for (std::uint32_t n = 0; n <= max_halts; ++n) {
      if (n > 0) items.push_back(Instruction::halt());
      const InstructionSeq padded(items);
      const ServiceFamily family = full_register(f, b);
      const Thread t = thread_extract(padded);
      if (!use(t, family).is_stop()) continue;
      const bool content = apply(t, family).find(f)->content();
      return n == 0 ? Outcome::halted(content) : Outcome::exit(n, content);
    }
    return Outcome::deadlock();
  };
  return {observe(false), observe(true)};
}

bool eeqv(const Instruction& u, const Instruction& v) {
  if (!u.is_basic() || !v.is_basic()) {
    throw Error("effectual equivalence is defined on register instructions only");
  }
  if (u.focus_name() != v.focus_name()) {
    throw FocusMismatch(render_instruction(u) + " and " + render_instruction(v) +
                        " use different foci");
  }
  const Focus f = u.focus();
  return summarize(InstructionSeq{u}, f) == summarize(InstructionSeq{v}, f);
}

std::vector<Instruction> class_representatives(const Focus& f) {
  static constexpr const char* kListing[] = {
      "+ff", "-tt", "-ti", "-tc", "ff",  "tt",  "ii",  "cc",
      "+if", "+it", "+ii", "-cc", "-if", "-it", "-ii", "+cc"};
  std::vector<Instruction> out;
  for (std::string_view code : kListing) {
    InstrKind kind = InstrKind::Plain;
    if (code[0] == '+' || code[0] == '-') {
      kind = code[0] == '+' ? InstrKind::PosTest : InstrKind::NegTest;
      code.remove_prefix(1);
    }
    out.push_back(Instruction::basic(kind, f, Method::from_code(code)));
  }
  return out;
}

std::vector<EquivalenceClass> equivalence_classes(const Focus& f) {
  std::map<EffectSummary, std::vector<Instruction>> by_summary;
  for (const Instruction& u : enumerate_instructions(MethodSet::all(), f)) {
    by_summary[summarize(InstructionSeq{u}, f)].push_back(u);
  }
  std::vector<EquivalenceClass> out;
  for (const Instruction& rep : class_representatives(f)) {
    const EffectSummary s = summarize(InstructionSeq{rep}, f);
    auto it = by_summary.find(s);
    if (it == by_summary.end()) continue;  // already emitted for another rep
    std::vector<Instruction> members = std::move(it->second);
    std::sort(members.begin(), members.end());
    out.push_back({rep, std::move(members), s});
    by_summary.erase(it);
  }
  // Classes without a designated representative would indicate a broken
  // semantics; keep them visible rather than dropping them.
  for (auto& [s, members] : by_summary) {
    std::sort(members.begin(), members.end());
    out.push_back({members.front(), std::move(members), s});
  }
  return out;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Position of a register instruction in enumerate_instructions(all, f).
std::size_t instruction_slot(const Instruction& u) {
  const std::size_t kind_slot =
      u.kind() == InstrKind::Plain ? 0 : (u.kind() == InstrKind::PosTest ? 1 : 2);
  return 3 * static_cast<std::size_t>(u.method().index()) + kind_slot;
}

std::vector<std::pair<Instruction, Instruction>> ground_instances(
    AxiomSchema schema, const Focus& f) {
  using enum UnaryFn;
  std::vector<std::pair<Instruction, Instruction>> out;
  for (UnaryFn p : kUnaryFns) {
    auto pos = [&](UnaryFn r) { return Instruction::pos_test(f, Method{r, p}); };
    auto neg = [&](UnaryFn r) { return Instruction::neg_test(f, Method{r, p}); };
    switch (schema) {
      case AxiomSchema::PosFalseNegTrue: out.emplace_back(pos(F), neg(T)); break;
      case AxiomSchema::PosTrueNegFalse: out.emplace_back(pos(T), neg(F)); break;
      case AxiomSchema::PosIdNegCompl: out.emplace_back(pos(I), neg(C)); break;
      case AxiomSchema::PosComplNegId: out.emplace_back(pos(C), neg(I)); break;
      case AxiomSchema::PosTrueIsPlain:
        for (UnaryFn q : kUnaryFns) {
          out.emplace_back(pos(T), Instruction::plain(f, Method{q, p}));
        }
        break;
    }
  }
  return out;
}

}  // namespace

AxiomReport check_axioms(const std::vector<AxiomSchema>& schemas) {
  const Focus f("f");
  const std::vector<Instruction> all = enumerate_instructions(MethodSet::all(), f);
  AxiomReport report;
  UnionFind closure(all.size());
  for (AxiomSchema schema : schemas) {
    for (const auto& [u, v] : ground_instances(schema, f)) {
      ++report.instances;
      if (!eeqv(u, v)) {
        report.violations.push_back(render_instruction(u) + " == " +
                                    render_instruction(v));
      }
      closure.unite(instruction_slot(u), instruction_slot(v));
    }
  }

  std::vector<std::size_t> computed(all.size());
  const auto classes = equivalence_classes(f);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const Instruction& u : classes[c].members) computed[instruction_slot(u)] = c;
  }

  std::vector<std::size_t> roots;
  report.closure_matches_partition = true;
  report.closure_refines_partition = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    roots.push_back(closure.find(i));
    for (std::size_t j = 0; j < i; ++j) {
      const bool same_closure = closure.find(i) == closure.find(j);
      const bool same_computed = computed[i] == computed[j];
      if (same_closure != same_computed) report.closure_matches_partition = false;
      if (same_closure && !same_computed) report.closure_refines_partition = false;
    }
  }
  std::sort(roots.begin(), roots.end());
  report.closure_classes =
      static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
  return report;
}

AxiomReport check_axioms() {
  return check_axioms({AxiomSchema::PosFalseNegTrue, AxiomSchema::PosTrueNegFalse,
                       AxiomSchema::PosIdNegCompl, AxiomSchema::PosComplNegId,
                       AxiomSchema::PosTrueIsPlain});
}

std::vector<std::uint16_t> minimal_hitting_sets(
    const std::vector<std::uint16_t>& sets) {
  std::vector<std::uint16_t> transversals{0};
  for (std::uint16_t edge : sets) {
    std::vector<std::uint16_t> next;
    for (std::uint16_t t : transversals) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (int e = 0; e < 16; ++e) {
        if ((edge >> e) & 1U) next.push_back(static_cast<std::uint16_t>(t | (1U << e)));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    // Keep only inclusion-minimal candidates.
    std::vector<std::uint16_t> minimal;
    for (std::uint16_t t : next) {
      const bool dominated = std::any_of(next.begin(), next.end(), [t](std::uint16_t s) {
        return s != t && (s & t) == s;
      });
      if (!dominated) minimal.push_back(t);
    }
    transversals = std::move(minimal);
  }
  return transversals;
}

std::vector<MethodSet> minimal_method_sets() {
  std::vector<std::uint16_t> supports;
  for (const EquivalenceClass& c : equivalence_classes(Focus("f"))) {
    std::uint16_t mask = 0;
    for (const Instruction& u : c.members) mask |= static_cast<std::uint16_t>(1U << u.method().index());
    supports.push_back(mask);
  }
  std::vector<MethodSet> out;
  for (std::uint16_t mask : minimal_hitting_sets(supports)) out.emplace_back(mask);
  return out;
}

namespace {

std::vector<Focus> checked_foci(const InstructionSeq& x, const InstructionSeq& y,
                                const std::vector<Focus>& foci) {
  std::vector<Focus> unique = foci;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (unique.size() > 16) throw Error("functional equivalence supports at most 16 foci");
  for (const InstructionSeq* seq : {&x, &y}) {
    for (const Focus& f : seq->foci()) {
      if (!std::binary_search(unique.begin(), unique.end(), f)) {
        throw FociIncomplete("focus " + f.name() + " is not in the focus list");
      }
    }
  }
  return unique;
}

ServiceFamily register_family(const std::vector<Focus>& foci, std::uint32_t bits) {
  ServiceFamily family;
  for (std::size_t i = 0; i < foci.size(); ++i) {
    family = family_compose(
        family, ServiceFamily::singleton(
                    foci[i], ServiceState::reg((bits >> i) & 1U, MethodSet::all())));
  }
  return family;
}

}  // namespace

bool feqv(const InstructionSeq& x, const InstructionSeq& y,
          const std::vector<Focus>& foci) {
  const std::vector<Focus> fs = checked_foci(x, y, foci);
  for (std::uint32_t bits = 0; bits < (1U << fs.size()); ++bits) {
    const ServiceFamily family = register_family(fs, bits);
    const RunResult rx = run_positional(x, family);
    if (rx.termination == Termination::Suspended) return false;
    if (rx != run_positional(y, family)) return false;
  }
  return true;
}

bool feqv_axiomatic(const InstructionSeq& x, const InstructionSeq& y,
                    const std::vector<Focus>& foci) {
  const std::vector<Focus> fs = checked_foci(x, y, foci);
  const Thread tx = thread_extract(x);
  const Thread ty = thread_extract(y);
  for (std::uint32_t bits = 0; bits < (1U << fs.size()); ++bits) {
    const ServiceFamily family = register_family(fs, bits);
    const Thread ux = use(tx, family);
    if (!ux.is_stop() && !ux.is_dead_end()) return false;
    if (!(ux == use(ty, family))) return false;
    if (apply(tx, family) != apply(ty, family)) return false;
  }
  return true;
}

}  // namespace boolreg
