#include "boolreg/isa.hpp"

#include <algorithm>
#include <bit>

namespace boolreg {

char fn_code(UnaryFn fn) {
  static constexpr char kCodes[] = {'f', 't', 'i', 'c'};
  return kCodes[static_cast<int>(fn)];
}

UnaryFn fn_from_code(char c) {
  switch (c) {
    case 'f': return UnaryFn::F;
    case 't': return UnaryFn::T;
    case 'i': return UnaryFn::I;
    case 'c': return UnaryFn::C;
    default: break;
  }
  throw Error(std::string("unknown function code '") + c + "'");
}

std::string Method::code() const {
  return {fn_code(reply), fn_code(transform)};
}

Method Method::from_code(std::string_view code) {
  if (code.size() != 2) {
    throw Error("method code must have two letters: '" + std::string(code) +
                "'");
  }
  return Method{fn_from_code(code[0]), fn_from_code(code[1])};
}

std::array<Method, kMethodCount> enumerate_methods() {
  std::array<Method, kMethodCount> out{};
  for (int i = 0; i < kMethodCount; ++i) out[i] = Method::from_index(i);
  return out;
}

MethodSet::MethodSet(std::initializer_list<Method> methods) {
  for (Method m : methods) insert(m);
}

MethodSet MethodSet::from_codes(std::string_view codes) {
  MethodSet out;
  std::size_t start = 0;
  while (start <= codes.size()) {
    const std::size_t comma = std::min(codes.find(',', start), codes.size());
    std::string_view token = codes.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) {
      if (codes.empty()) break;
      throw Error("empty method code in list '" + std::string(codes) + "'");
    }
    out.insert(Method::from_code(token));
    start = comma + 1;
  }
  return out;
}

int MethodSet::size() const { return std::popcount(mask_); }

std::vector<Method> MethodSet::methods() const {
  std::vector<Method> out;
  for (int i = 0; i < kMethodCount; ++i) {
    if ((mask_ >> i) & 1U) out.push_back(Method::from_index(i));
  }
  return out;
}

std::string MethodSet::to_codes() const {
  std::string out;
  for (Method m : methods()) {
    if (!out.empty()) out += ',';
    out += m.code();
  }
  return out;
}

MethodSet canonical_base() { return MethodSet::from_codes("ff,tt,ii,cc,if,it,ti,tc"); }

Focus::Focus(std::string name) : name_(std::move(name)) {
  if (!is_valid(name_)) throw Error("invalid focus name '" + name_ + "'");
}

bool Focus::is_valid(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  });
}

Instruction Instruction::basic(InstrKind kind, Focus f, Method m) {
  return Instruction(kind, f.name(), m, 0);
}
Instruction Instruction::plain(Focus f, Method m) {
  return basic(InstrKind::Plain, std::move(f), m);
}
Instruction Instruction::pos_test(Focus f, Method m) {
  return basic(InstrKind::PosTest, std::move(f), m);
}
Instruction Instruction::neg_test(Focus f, Method m) {
  return basic(InstrKind::NegTest, std::move(f), m);
}
Instruction Instruction::jump(std::uint32_t label) {
  return Instruction(InstrKind::Jump, {}, Method{}, label);
}
Instruction Instruction::halt() {
  return Instruction(InstrKind::Halt, {}, Method{}, 0);
}

Focus Instruction::focus() const {
  if (!is_basic()) throw Error("jump and halt instructions have no focus");
  return Focus(focus_);
}

Instruction Instruction::with_focus(const Focus& f) const {
  if (!is_basic()) return *this;
  return Instruction(kind_, f.name(), method_, label_);
}

std::strong_ordering operator<=>(const Instruction& a, const Instruction& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.focus_ <=> b.focus_; c != 0) return c;
  if (auto c = a.method_.index() <=> b.method_.index(); c != 0) return c;
  return a.label_ <=> b.label_;
}

std::vector<Instruction> enumerate_instructions(MethodSet methods,
                                                const Focus& focus) {
  std::vector<Instruction> out;
  out.reserve(3 * static_cast<std::size_t>(methods.size()));
  for (Method m : methods.methods()) {
    out.push_back(Instruction::plain(focus, m));
    out.push_back(Instruction::pos_test(focus, m));
    out.push_back(Instruction::neg_test(focus, m));
  }
  return out;
}

InstructionSeq::InstructionSeq(std::vector<Instruction> items)
    : items_(std::move(items)) {
  if (items_.empty()) throw Error("instruction sequences must be non-empty");
}

InstructionSeq::InstructionSeq(std::initializer_list<Instruction> items)
    : InstructionSeq(std::vector<Instruction>(items)) {}

InstructionSeq InstructionSeq::concat(const InstructionSeq& tail) const {
  std::vector<Instruction> out = items_;
  out.insert(out.end(), tail.items_.begin(), tail.items_.end());
  return InstructionSeq(std::move(out));
}

std::vector<Focus> InstructionSeq::foci() const {
  std::vector<Focus> out;
  for (const Instruction& u : items_) {
    if (!u.is_basic()) continue;
    Focus f = u.focus();
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

}  // namespace boolreg
