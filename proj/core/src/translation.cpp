#include "boolreg/translation.hpp"

#include <algorithm>
#include <numeric>

namespace boolreg {

TranslationMap TranslationMap::build(
    MethodSet methods, const std::map<Instruction, InstructionSeq>& class_sequences) {
  const Focus& f = search_focus();
  std::map<EffectSummary, InstructionSeq> by_effect;
  for (const auto& [key, seq] : class_sequences) {
    std::vector<Instruction> items;
    for (const Instruction& u : seq) items.push_back(u.with_focus(f));
    by_effect.insert_or_assign(Target::of(key).summary, InstructionSeq(std::move(items)));
  }
  // Least instruction of PI_br(M) per effect.
  std::map<EffectSummary, Instruction> native;
  for (const Instruction& u : enumerate_instructions(methods, f)) {
    const EffectSummary s = summarize(InstructionSeq{u}, f);
    auto it = native.find(s);
    if (it == native.end() || u < it->second) native.insert_or_assign(s, u);
  }

  TranslationMap out;
  out.methods_ = methods;
  for (const Instruction& u : enumerate_instructions(MethodSet::all(), f)) {
    if (methods.contains(u.method())) {
      out.entries_.emplace(u, InstructionSeq{u});
      continue;
    }
    const EffectSummary s = summarize(InstructionSeq{u}, f);
    if (auto it = native.find(s); it != native.end()) {
      out.entries_.emplace(u, InstructionSeq{it->second});
    } else if (auto jt = by_effect.find(s); jt != by_effect.end()) {
      out.entries_.emplace(u, jt->second);
    }
  }
  return out;
}

bool TranslationMap::has_image(const Instruction& u) const {
  return !u.is_basic() || entries_.contains(u.with_focus(search_focus()));
}

InstructionSeq TranslationMap::image(const Instruction& u) const {
  if (!u.is_basic()) return InstructionSeq{u};
  auto it = entries_.find(u.with_focus(search_focus()));
  if (it == entries_.end()) {
    throw MissingMapping("no translation for " + render_instruction(u));
  }
  if (u.focus_name() == search_focus().name()) return it->second;
  const Focus target = u.focus();
  std::vector<Instruction> items;
  for (const Instruction& v : it->second) items.push_back(v.with_focus(target));
  return InstructionSeq(std::move(items));
}

std::size_t TranslationMap::max_length() const {
  std::size_t longest = 1;
  for (const auto& [key, seq] : entries_) longest = std::max(longest, seq.size());
  return longest;
}

InstructionSeq rewrite_psi_prime(const InstructionSeq& x, const TranslationMap& psi) {
  const std::size_t n = x.size();
  std::vector<InstructionSeq> images;
  std::vector<std::uint64_t> growth(n, 0);
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(psi.image(x[i]));
    growth[i] = images.back().size() - 1;
  }
  std::vector<Instruction> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Instruction& u = x[i];
    if (u.kind() != InstrKind::Jump) {
      out.insert(out.end(), images[i].begin(), images[i].end());
      continue;
    }
    // l' = l + sum over j = i .. i+l-1 of (len(psi(u_j)) - 1).
    const std::size_t stop = std::min<std::size_t>(n, i + u.label());
    const std::uint64_t widened =
        u.label() + std::accumulate(growth.begin() + static_cast<std::ptrdiff_t>(i),
                                    growth.begin() + static_cast<std::ptrdiff_t>(std::max(i, stop)),
                                    std::uint64_t{0});
    if (widened > UINT32_MAX) throw Error("rewritten jump label overflows");
    out.push_back(Instruction::jump(static_cast<std::uint32_t>(widened)));
  }
  return InstructionSeq(std::move(out));
}

std::size_t count_replaced(const InstructionSeq& x, const TranslationMap& psi) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [&](const Instruction& u) {
    return u.is_basic() && !psi.methods().contains(u.method());
  }));
}

std::vector<FixtureItem> fixture_items() {
  struct Row {
    const char* id;
    const char* key;
    const char* witness;
  };
  static constexpr Row kRows[] = {
      {"a", "-f.ti", "#2"},
      {"b", "-f.tc", "f.cc ; #2"},
      {"c1", "+f.if", "+f.ii ; +f.ff ; +f.ff"},
      {"c2", "+f.if", "-f.cc ; +f.ff ; +f.ff"},
      {"c3", "+f.if", "+f.ii ; +f.cc ; #2"},
      {"c4", "+f.if", "-f.cc ; #2 ; +f.cc"},
      {"d1", "-f.if", "-f.ii ; +f.ff ; +f.ff"},
      {"d2", "-f.if", "+f.cc ; +f.ff ; +f.ff"},
      {"d3", "-f.if", "-f.ii ; #2 ; +f.cc"},
      {"d4", "-f.if", "+f.cc ; +f.cc ; #2"},
      {"e1", "+f.it", "+f.ii ; -f.tt ; -f.tt"},
      {"e2", "+f.it", "-f.cc ; -f.tt ; -f.tt"},
      {"e3", "+f.it", "+f.ii ; #2 ; -f.cc"},
      {"e4", "+f.it", "-f.cc ; -f.cc ; #2"},
      {"f1", "-f.it", "-f.ii ; -f.tt ; -f.tt"},
      {"f2", "-f.it", "+f.cc ; -f.tt ; -f.tt"},
      {"f3", "-f.it", "-f.ii ; -f.cc ; #2"},
      {"f4", "-f.it", "+f.cc ; #2 ; -f.cc"},
      {"g", "f.cc", "+f.ii ; +f.ff ; f.tt"},
      {"h", "+f.cc", "-f.ii ; -f.tt ; +f.ff"},
      {"i", "-f.cc", "+f.ii ; +f.ff ; -f.tt"},
      {"j", "-f.tc", "+f.ii ; +f.ff ; f.tt ; #2"},
      {"k", "f.ff", "+f.cc ; f.cc"},
      {"l", "+f.ff", "+f.cc ; f.cc ; #2"},
      {"m", "f.tt", "-f.cc ; f.cc"},
      {"n", "-f.tt", "-f.cc ; f.cc ; #2"},
      {"o", "f.ii", "f.cc ; f.cc"},
      {"p", "+f.ii", "f.cc ; +f.cc"},
      {"q", "-f.ii", "f.cc ; -f.cc"},
      {"r", "f.ff", "f.if"},
      {"s", "+f.ff", "f.if ; #2"},
      {"t", "f.tt", "f.it"},
      {"u", "-f.tt", "f.it ; #2"},
      {"v1", "f.ii", "+f.if ; +f.it ; -f.if"},
      {"v2", "f.ii", "+f.it ; -f.it ; +f.if"},
      {"v3", "f.ii", "+f.if ; +f.it ; #1"},
      {"v4", "f.ii", "+f.it ; #2 ; +f.if"},
      {"w1", "+f.ii", "+f.if ; +f.it ; +f.if"},
      {"w2", "+f.ii", "+f.it ; -f.it ; -f.if"},
      {"w3", "+f.ii", "+f.if ; +f.it ; #2"},
      {"w4", "+f.ii", "+f.it ; #2 ; -f.if"},
      {"x1", "-f.ii", "-f.if ; +f.if ; +f.it"},
      {"x2", "-f.ii", "-f.it ; -f.if ; -f.it"},
      {"x3", "-f.ii", "-f.if ; #2 ; +f.it"},
      {"x4", "-f.ii", "-f.it ; -f.if ; #2"},
      {"y1", "f.cc", "+f.if ; +f.if ; -f.it"},
      {"y2", "f.cc", "+f.it ; -f.if ; +f.it"},
      {"y3", "f.cc", "+f.if ; #2 ; -f.it"},
      {"y4", "f.cc", "+f.it ; -f.if ; #1"},
      {"z1", "+f.cc", "-f.if ; +f.it ; +f.if"},
      {"z2", "+f.cc", "-f.it ; -f.it ; -f.if"},
      {"z3", "+f.cc", "-f.if ; +f.it ; #2"},
      {"z4", "+f.cc", "-f.it ; #2 ; -f.if"},
      {"aa1", "-f.cc", "+f.if ; +f.if ; +f.it"},
      {"aa2", "-f.cc", "+f.it ; -f.if ; -f.it"},
      {"aa3", "-f.cc", "+f.if ; #2 ; +f.it"},
      {"aa4", "-f.cc", "+f.it ; -f.if ; #2"},
      {"ab1", "-f.tc", "+f.if ; +f.if ; -f.it ; #2"},
      {"ab2", "-f.tc", "+f.it ; -f.if ; +f.it ; #2"},
      {"ab3", "-f.tc", "+f.if ; #2 ; -f.it ; #2"},
      {"ab4", "-f.tc", "+f.it ; -f.if ; #1 ; #2"},
  };
  std::vector<FixtureItem> out;
  for (const Row& row : kRows) {
    out.push_back({row.id, parse_instruction(row.key), parse_sequence(row.witness)});
  }
  return out;
}

const std::vector<FixturePart>& fixture_parts() {
  static const std::vector<FixturePart> parts = [] {
    auto alts = [](std::initializer_list<const char*> ids) {
      return std::vector<std::string>(ids.begin(), ids.end());
    };
    auto four = [](const std::string& stem) {
      return std::vector<std::string>{stem + "1", stem + "2", stem + "3", stem + "4"};
    };
    std::vector<FixturePart> out;
    out.push_back({1, MethodSet::from_codes("ff,tt,ii,cc,if,it"), 2, {alts({"a"}), alts({"b"})}});
    out.push_back({2, MethodSet::from_codes("ff,tt,ii,cc"), 3,
                   {alts({"a"}), alts({"b"}), four("c"), four("d"), four("e"), four("f")}});
    out.push_back({3, MethodSet::from_codes("ff,tt,ii"), 4,
                   {alts({"a"}), alts({"c1", "c3"}), alts({"d1", "d3"}), alts({"e1", "e3"}),
                    alts({"f1", "f3"}), alts({"g"}), alts({"h"}), alts({"i"}), alts({"j"})}});
    out.push_back({4, MethodSet::from_codes("cc"), 3,
                   {alts({"a"}), alts({"b"}), alts({"c4"}), alts({"d4"}), alts({"e4"}),
                    alts({"f4"}), alts({"k"}), alts({"l"}), alts({"m"}), alts({"n"}),
                    alts({"o"}), alts({"p"}), alts({"q"})}});
    out.push_back({5, MethodSet::from_codes("if,it"), 4,
                   {alts({"a"}), alts({"r"}), alts({"s"}), alts({"t"}), alts({"u"}), four("v"),
                    four("w"), four("x"), four("y"), four("z"), four("aa"), four("ab")}});
    return out;
  }();
  return parts;
}

namespace {

const FixtureItem& item_by_id(const std::vector<FixtureItem>& items, const std::string& id) {
  auto it = std::find_if(items.begin(), items.end(),
                         [&](const FixtureItem& item) { return item.id == id; });
  if (it == items.end()) throw Error("unknown fixture item '" + id + "'");
  return *it;
}

bool within_methods(const InstructionSeq& seq, MethodSet methods) {
  return std::all_of(seq.begin(), seq.end(), [&](const Instruction& u) {
    return !u.is_basic() || methods.contains(u.method());
  });
}

}  // namespace

std::vector<TranslationMap> fixture_maps(const FixturePart& part,
                                         const std::vector<FixtureItem>& items) {
  std::vector<TranslationMap> out;
  std::vector<std::size_t> choice(part.slots.size(), 0);
  while (true) {
    std::map<Instruction, InstructionSeq> sequences;
    for (std::size_t s = 0; s < part.slots.size(); ++s) {
      const FixtureItem& item = item_by_id(items, part.slots[s][choice[s]]);
      sequences.insert_or_assign(item.key, item.witness);
    }
    out.push_back(TranslationMap::build(part.methods, sequences));
    std::size_t s = part.slots.size();
    while (s > 0 && ++choice[s - 1] == part.slots[s - 1].size()) choice[--s] = 0;
    if (s == 0) break;
  }
  return out;
}

std::map<int, std::vector<TranslationMap>> theorem3_fixtures() {
  const auto items = fixture_items();
  for (const FixtureCheck& check : verify_fixtures(items)) {
    if (check.id.starts_with("thm3-fixture-") && !check.passed) {
      throw FixtureInvalid(check.id + ": " + check.detail);
    }
  }
  std::map<int, std::vector<TranslationMap>> out;
  for (const FixturePart& part : fixture_parts()) out[part.part] = fixture_maps(part, items);
  return out;
}

TranslationMap fixture_map(int part) {
  for (const FixturePart& p : fixture_parts()) {
    if (p.part != part) continue;
    const auto items = fixture_items();
    std::map<Instruction, InstructionSeq> sequences;
    for (const auto& slot : p.slots) {
      const FixtureItem& item = item_by_id(items, slot.front());
      sequences.insert_or_assign(item.key, item.witness);
    }
    return TranslationMap::build(p.methods, sequences);
  }
  throw Error("no fixture part " + std::to_string(part));
}

std::vector<FixtureCheck> verify_fixtures(const std::vector<FixtureItem>& items) {
  std::vector<FixtureCheck> out;
  const auto& parts = fixture_parts();

  for (const FixtureItem& item : items) {
    FixtureCheck check{"thm3-fixture-" + item.id, true, {}};
    auto fail = [&](const std::string& why) {
      check.passed = false;
      if (!check.detail.empty()) check.detail += "; ";
      check.detail += why;
    };
    const Target target = Target::of(item.key);
    const std::string text = render_sequence(item.witness);
    if (!realizes(item.witness, target)) fail(text + " does not realize " + target.code());
    if (!realizes_axiomatic(item.witness, target)) {
      fail(text + " does not realize " + target.code() + " on the thread route");
    }
    bool used = false;
    bool fits_some_part = false;
    for (const FixturePart& part : parts) {
      const bool in_part = std::any_of(part.slots.begin(), part.slots.end(), [&](const auto& slot) {
        return std::find(slot.begin(), slot.end(), item.id) != slot.end();
      });
      if (!in_part) continue;
      used = true;
      if (item.witness.size() > part.stated_k) {
        fail("length " + std::to_string(item.witness.size()) + " exceeds the bound " +
             std::to_string(part.stated_k) + " of part " + std::to_string(part.part));
      }
      if (within_methods(item.witness, part.methods)) fits_some_part = true;
    }
    if (!used) fail("not used by any part");
    if (used && !fits_some_part) fail("uses methods outside every part that lists it");
    if (check.passed) check.detail = text + " realizes " + target.code();
    out.push_back(std::move(check));
  }

  for (const FixturePart& part : parts) {
    FixtureCheck check{"thm3-part" + std::to_string(part.part), true, {}};
    std::size_t maps = 0;
    std::size_t skipped = 0;
    for (const TranslationMap& psi : fixture_maps(part, items)) {
      const bool native = std::all_of(psi.entries().begin(), psi.entries().end(),
                                      [&](const auto& e) { return within_methods(e.second, part.methods); });
      if (!native) {
        // Alternatives listed for this part that use methods outside it.
        ++skipped;
        continue;
      }
      ++maps;
      std::string problem;
      if (psi.entries().size() != 48) problem = "map is not total";
      for (const auto& [key, image] : psi.entries()) {
        if (!realizes(image, Target::of(key))) {
          problem = render_sequence(image) + " does not realize " + render_instruction(key);
        }
      }
      if (problem.empty() && psi.max_length() != part.stated_k) {
        problem = "longest image has length " + std::to_string(psi.max_length());
      }
      if (!problem.empty()) {
        check.passed = false;
        check.detail = problem;
        break;
      }
    }
    if (maps == 0) {
      check.passed = false;
      check.detail = "no map stays inside the part's methods";
    }
    if (check.passed) {
      check.detail = std::to_string(maps) + " maps verified";
      if (skipped > 0) {
        check.detail += ", " + std::to_string(skipped) +
                        " combinations skipped for using methods outside " +
                        part.methods.to_codes();
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace boolreg
