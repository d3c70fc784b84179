#include "boolreg/completeness.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace boolreg {

const Focus& search_focus() {
  static const Focus f("f");
  return f;
}

const std::array<Target, kTargetCount>& all_targets() {
  static const std::array<Target, kTargetCount> targets = [] {
    std::array<Target, kTargetCount> out{};
    const auto reps = class_representatives(search_focus());
    for (int i = 0; i < kTargetCount; ++i) {
      out[i] = Target{summarize(InstructionSeq{reps[i]}, search_focus())};
    }
    return out;
  }();
  return targets;
}

int Target::index() const {
  const auto& targets = all_targets();
  auto it = std::find(targets.begin(), targets.end(), *this);
  if (it == targets.end()) throw Error("not a target summary: " + summary.to_string());
  return static_cast<int>(it - targets.begin());
}

std::string Target::code() const {
  return render_instruction(class_representatives(search_focus())[index()]);
}

Target Target::of(const Instruction& u) {
  if (!u.is_basic()) throw Error("targets are effects of register instructions");
  return Target{summarize(InstructionSeq{u.with_focus(search_focus())}, search_focus())};
}

Target Target::from_code(std::string_view code) {
  return of(parse_instruction(code));
}

namespace {

Focus focus_of(const InstructionSeq& seq) {
  const auto foci = seq.foci();
  if (foci.size() > 1) throw ForeignFocus("witnesses use a single focus");
  return foci.empty() ? search_focus() : foci.front();
}

}  // namespace

bool realizes(const InstructionSeq& seq, const Target& t) {
  return summarize(seq, focus_of(seq)) == t.summary;
}

bool realizes_axiomatic(const InstructionSeq& seq, const Target& t) {
  // Target exits are at offsets <= 2; one more halt separates offset 2 from
  // anything further away.
  return observe_summary(seq, focus_of(seq), 3) == t.summary;
}

std::vector<Instruction> search_alphabet(MethodSet methods, std::uint32_t length,
                                         std::uint32_t label_slack) {
  std::vector<Instruction> out;
  for (std::uint32_t l = 0; l <= length + label_slack; ++l) {
    out.push_back(Instruction::jump(l));
  }
  out.push_back(Instruction::halt());
  for (InstrKind kind : {InstrKind::Plain, InstrKind::PosTest, InstrKind::NegTest}) {
    for (Method m : methods.methods()) {
      out.push_back(Instruction::basic(kind, search_focus(), m));
    }
  }
  return out;
}

namespace {

using TargetSlots = std::array<std::optional<InstructionSeq>, kTargetCount>;

std::vector<bool> wanted_mask(const std::vector<int>& wanted) {
  std::vector<bool> mask(kTargetCount, wanted.empty());
  for (int t : wanted) mask.at(static_cast<std::size_t>(t)) = true;
  return mask;
}

// Suffix effects are reduced to what still matters for a target:
// 0 when the path can no longer realize any target (deadlock, halt, exit
// beyond offset 2), else 1 + 2 (d - 1) + c for exit(d, c) with d in {1, 2}.
// A position's pair of effects (input 0, input 1) is coded as e0 * 5 + e1 and
// a suffix of length j packs its pairs at 5 bits each, first position lowest.
constexpr std::uint8_t kDead = 0;
constexpr int kPairBits = 5;

std::uint8_t exit_effect(std::uint32_t offset, bool content) {
  if (offset == 0 || offset > 2) return kDead;
  return static_cast<std::uint8_t>(1 + 2 * (offset - 1) + (content ? 1 : 0));
}

struct Symbol {
  InstrKind kind;
  std::uint32_t label;
  Method method;
};

std::uint8_t reach(std::uint64_t suffix, std::uint32_t length, std::uint32_t pos,
                   bool content) {
  if (pos <= length) {
    const auto pair =
        static_cast<std::uint8_t>((suffix >> (kPairBits * (pos - 1))) & 31U);
    return content ? pair % 5 : pair / 5;
  }
  return exit_effect(pos - length, content);
}

std::uint8_t effect_of(const Symbol& s, std::uint64_t suffix, std::uint32_t length,
                       bool input) {
  switch (s.kind) {
    case InstrKind::Jump:
      return s.label == 0 ? kDead : reach(suffix, length, s.label, input);
    case InstrKind::Halt: return kDead;
    default: break;
  }
  const bool reply = apply_fn(s.method.reply, input);
  const bool content = apply_fn(s.method.transform, input);
  std::uint32_t next = 1;
  if (s.kind == InstrKind::PosTest && !reply) next = 2;
  if (s.kind == InstrKind::NegTest && reply) next = 2;
  return reach(suffix, length, next, content);
}

std::uint8_t pair_of(const Symbol& s, std::uint64_t suffix, std::uint32_t length) {
  return static_cast<std::uint8_t>(effect_of(s, suffix, length, false) * 5 +
                                   effect_of(s, suffix, length, true));
}

// Target index for each pair code, -1 when either side is dead.
std::array<int, 25> target_of_pair() {
  std::array<int, 25> out{};
  out.fill(-1);
  for (int e0 = 1; e0 < 5; ++e0) {
    for (int e1 = 1; e1 < 5; ++e1) {
      auto decode = [](int e) {
        return Outcome::exit(static_cast<std::uint32_t>((e - 1) / 2 + 1), (e - 1) % 2 == 1);
      };
      out[e0 * 5 + e1] = Target{EffectSummary{decode(e0), decode(e1)}}.index();
    }
  }
  return out;
}

TargetSlots search_deduplicated(MethodSet methods, const SearchOptions& options,
                                const std::vector<bool>& wanted) {
  if (options.kmax > kMaxSearchLength) {
    throw Error("kmax above " + std::to_string(kMaxSearchLength) +
                " is not supported by the deduplicating search");
  }
  static const std::array<int, 25> pair_target = target_of_pair();
  TargetSlots found;
  int remaining = static_cast<int>(std::count(wanted.begin(), wanted.end(), true));

  for (std::uint32_t length = 1; length <= options.kmax && remaining > 0; ++length) {
    const std::vector<Instruction> alphabet =
        search_alphabet(methods, length, options.label_slack);
    std::vector<Symbol> symbols;
    for (const Instruction& u : alphabet) {
      symbols.push_back({u.kind(), u.label(), u.method()});
    }

    // Level j holds distinct suffix vectors of length j together with the
    // lexicographically least suffix producing each; entries are appended
    // in lexicographic order of their suffixes.
    std::vector<std::uint64_t> keys{0};
    std::vector<std::uint8_t> seqs;
    for (std::uint32_t j = 1; j < length; ++j) {
      std::vector<std::uint64_t> next_keys;
      std::vector<std::uint8_t> next_seqs;
      std::unordered_set<std::uint64_t> seen;
      seen.reserve(keys.size() * 4);
      for (std::size_t si = 0; si < symbols.size(); ++si) {
        for (std::size_t e = 0; e < keys.size(); ++e) {
          const std::uint64_t key =
              (keys[e] << kPairBits) | pair_of(symbols[si], keys[e], j - 1);
          if (!seen.insert(key).second) continue;
          next_keys.push_back(key);
          next_seqs.push_back(static_cast<std::uint8_t>(si));
          next_seqs.insert(next_seqs.end(), seqs.begin() + static_cast<std::ptrdiff_t>(e * (j - 1)),
                           seqs.begin() + static_cast<std::ptrdiff_t>((e + 1) * (j - 1)));
        }
      }
      keys = std::move(next_keys);
      seqs = std::move(next_seqs);
    }

    const std::uint32_t tail = length - 1;
    for (std::size_t si = 0; si < symbols.size() && remaining > 0; ++si) {
      for (std::size_t e = 0; e < keys.size() && remaining > 0; ++e) {
        const int t = pair_target[pair_of(symbols[si], keys[e], tail)];
        if (t < 0 || !wanted[t] || found[t]) continue;
        std::vector<Instruction> items{alphabet[si]};
        for (std::uint32_t k = 0; k < tail; ++k) {
          items.push_back(alphabet[seqs[e * tail + k]]);
        }
        found[t] = InstructionSeq(std::move(items));
        --remaining;
      }
    }
  }
  return found;
}

TargetSlots search_naive(MethodSet methods, const SearchOptions& options,
                         const std::vector<bool>& wanted) {
  TargetSlots found;
  int remaining = static_cast<int>(std::count(wanted.begin(), wanted.end(), true));
  std::map<EffectSummary, int> target_index;
  for (int t = 0; t < kTargetCount; ++t) target_index[all_targets()[t].summary] = t;

  for (std::uint32_t length = 1; length <= options.kmax && remaining > 0; ++length) {
    const std::vector<Instruction> alphabet =
        search_alphabet(methods, length, options.label_slack);
    std::vector<std::size_t> digits(length, 0);
    while (remaining > 0) {
      std::vector<Instruction> items;
      items.reserve(length);
      for (std::size_t d : digits) items.push_back(alphabet[d]);
      InstructionSeq candidate(std::move(items));
      auto it = target_index.find(summarize(candidate, search_focus()));
      if (it != target_index.end() && wanted[it->second] && !found[it->second]) {
        found[it->second] = std::move(candidate);
        --remaining;
      }
      // Odometer step, last position fastest: lexicographic order.
      std::size_t pos = length;
      while (pos > 0 && ++digits[pos - 1] == alphabet.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return found;
}

}  // namespace

std::array<std::optional<InstructionSeq>, kTargetCount> search_witnesses(
    MethodSet methods, const SearchOptions& options, const std::vector<int>& wanted) {
  if (options.kmax == 0) throw Error("kmax must be at least 1");
  const std::vector<bool> mask = wanted_mask(wanted);
  return options.strategy == SearchStrategy::Naive
             ? search_naive(methods, options, mask)
             : search_deduplicated(methods, options, mask);
}

std::optional<InstructionSeq> find_witness(MethodSet methods, const Target& t,
                                           std::uint32_t kmax,
                                           SearchStrategy strategy) {
  SearchOptions options;
  options.kmax = kmax;
  options.strategy = strategy;
  return search_witnesses(methods, options, {t.index()})[t.index()];
}

std::vector<UnaryFn> transform_monoid(MethodSet methods) {
  std::array<bool, 4> in{};
  in[static_cast<int>(UnaryFn::I)] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (UnaryFn g : kUnaryFns) {
      if (!in[static_cast<int>(g)]) continue;
      for (Method m : methods.methods()) {
        const UnaryFn h = compose_fn(m.transform, g);
        if (!in[static_cast<int>(h)]) {
          in[static_cast<int>(h)] = true;
          grew = true;
        }
      }
    }
  }
  std::vector<UnaryFn> out;
  for (UnaryFn g : kUnaryFns) {
    if (in[static_cast<int>(g)]) out.push_back(g);
  }
  return out;
}

std::string Certificate::to_string() const {
  if (kind == Kind::InputBlindBranching) return "input-blind-branching";
  return std::string("unwritable(") + (input ? "1" : "0") + "->" +
         (required ? "1" : "0") + ")";
}

std::optional<Certificate> incompleteness_certificate(MethodSet methods,
                                                      const Target& t) {
  const std::vector<UnaryFn> monoid = transform_monoid(methods);
  auto in_monoid = [&](UnaryFn g) {
    return std::find(monoid.begin(), monoid.end(), g) != monoid.end();
  };
  // Every path applies the transforms it meets, so the final content is
  // g(input) for some g in the monoid.
  for (bool input : {false, true}) {
    const bool required = t.summary.on(input).content;
    const bool reachable = std::any_of(monoid.begin(), monoid.end(), [&](UnaryFn g) {
      return apply_fn(g, input) == required;
    });
    if (!reachable) return Certificate{Certificate::Kind::Unwritable, input, required};
  }
  // With constant replies both inputs follow the same path: same exit and
  // the same transform applied.
  const auto ms = methods.methods();
  const bool blind = std::all_of(ms.begin(), ms.end(), [](Method m) {
    return m.reply == UnaryFn::F || m.reply == UnaryFn::T;
  });
  if (blind) {
    const bool same_exit = t.summary.on0.offset == t.summary.on1.offset;
    const UnaryFn effect = fn_from_table(t.summary.on0.content, t.summary.on1.content);
    if (!same_exit || !in_monoid(effect)) {
      return Certificate{Certificate::Kind::InputBlindBranching, false, false};
    }
  }
  return std::nullopt;
}

std::string Verdict::to_string() const {
  switch (kind) {
    case Kind::Bound: return "bound " + std::to_string(k);
    case Kind::CertifiedIncomplete:
      return "incomplete " + target->code() + " " + certificate->to_string();
    case Kind::UnknownBeyond: break;
  }
  return "unknown beyond " + std::to_string(k);
}

Verdict strict_bound(MethodSet methods, const SearchOptions& options) {
  const auto found = search_witnesses(methods, options);
  Verdict verdict;
  std::uint32_t longest = 0;
  bool complete = true;
  for (int t = 0; t < kTargetCount; ++t) {
    if (!found[t]) {
      complete = false;
      continue;
    }
    verdict.witnesses.push_back({all_targets()[t], *found[t]});
    longest = std::max(longest, static_cast<std::uint32_t>(found[t]->size()));
  }
  if (complete) {
    verdict.kind = Verdict::Kind::Bound;
    verdict.k = longest;
    return verdict;
  }
  for (int t = 0; t < kTargetCount; ++t) {
    if (found[t]) continue;
    if (auto cert = incompleteness_certificate(methods, all_targets()[t])) {
      verdict.kind = Verdict::Kind::CertifiedIncomplete;
      verdict.target = all_targets()[t];
      verdict.certificate = cert;
      verdict.witnesses.clear();
      return verdict;
    }
  }
  verdict.kind = Verdict::Kind::UnknownBeyond;
  verdict.k = options.kmax;
  return verdict;
}

}  // namespace boolreg
