#pragma once

// Instruction model for single-pass instruction sequences acting on Boolean
// registers: unary Boolean functions, methods m(p,q), method sets, foci,
// primitive instructions and finite instruction sequences.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boolreg {

/// One of the four functions Bool -> Bool. Declaration order is the
/// canonical order F < T < I < C used everywhere for enumeration.
enum class UnaryFn : std::uint8_t { F = 0, T = 1, I = 2, C = 3 };

inline constexpr std::array<UnaryFn, 4> kUnaryFns{UnaryFn::F, UnaryFn::T,
                                                  UnaryFn::I, UnaryFn::C};

constexpr bool apply_fn(UnaryFn fn, bool b) {
  switch (fn) {
    case UnaryFn::F: return false;
    case UnaryFn::T: return true;
    case UnaryFn::I: return b;
    case UnaryFn::C: return !b;
  }
  return false;
}

/// The function b -> g(f(b)).
constexpr UnaryFn compose_fn(UnaryFn g, UnaryFn f) {
  const bool at0 = apply_fn(g, apply_fn(f, false));
  const bool at1 = apply_fn(g, apply_fn(f, true));
  if (at0 == at1) return at0 ? UnaryFn::T : UnaryFn::F;
  return at1 ? UnaryFn::I : UnaryFn::C;
}

/// The unary function with the given values at 0 and 1.
constexpr UnaryFn fn_from_table(bool at0, bool at1) {
  if (at0 == at1) return at0 ? UnaryFn::T : UnaryFn::F;
  return at1 ? UnaryFn::I : UnaryFn::C;
}

char fn_code(UnaryFn fn);
UnaryFn fn_from_code(char c);

/// Method m(p,q): a register holding b replies p(b) and then holds q(b).
struct Method {
  UnaryFn reply = UnaryFn::F;
  UnaryFn transform = UnaryFn::F;

  /// Position in the canonical enumeration (reply major, transform minor).
  constexpr int index() const {
    return 4 * static_cast<int>(reply) + static_cast<int>(transform);
  }
  static constexpr Method from_index(int i) {
    return Method{static_cast<UnaryFn>(i / 4), static_cast<UnaryFn>(i % 4)};
  }

  /// Two-letter code, reply then transform, e.g. "tc" for m(T,C).
  std::string code() const;
  static Method from_code(std::string_view code);

  friend constexpr bool operator==(Method a, Method b) {
    return a.index() == b.index();
  }
  friend constexpr auto operator<=>(Method a, Method b) {
    return a.index() <=> b.index();
  }
};

inline constexpr int kMethodCount = 16;

/// All 16 methods in canonical order.
std::array<Method, kMethodCount> enumerate_methods();

/// Subset of the 16 methods stored as a 16-bit mask; bit i is the method
/// with index i.
class MethodSet {
 public:
  constexpr MethodSet() = default;
  constexpr explicit MethodSet(std::uint16_t mask) : mask_(mask) {}
  MethodSet(std::initializer_list<Method> methods);

  static constexpr MethodSet all() { return MethodSet(0xFFFF); }

  /// Parses a comma separated list of two-letter codes ("ff,tt,ii").
  static MethodSet from_codes(std::string_view codes);

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr bool contains(Method m) const { return (mask_ >> m.index()) & 1U; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const;
  void insert(Method m) { mask_ |= static_cast<std::uint16_t>(1U << m.index()); }
  void erase(Method m) { mask_ &= static_cast<std::uint16_t>(~(1U << m.index())); }
  constexpr bool is_subset_of(MethodSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  /// Members in canonical order.
  std::vector<Method> methods() const;
  /// Comma separated codes in canonical order; "" for the empty set.
  std::string to_codes() const;

  friend constexpr bool operator==(MethodSet, MethodSet) = default;
  friend constexpr auto operator<=>(MethodSet a, MethodSet b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  std::uint16_t mask_ = 0;
};

/// {ff, tt, ii, cc, if, it, ti, tc}: one minimal set whose instructions
/// cover every effect class.
MethodSet canonical_base();

/// Name of a service in a family. Grammar: [a-z][a-z0-9]*.
class Focus {
 public:
  explicit Focus(std::string name);

  static bool is_valid(std::string_view name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Focus&, const Focus&) = default;
  friend auto operator<=>(const Focus&, const Focus&) = default;

 private:
  std::string name_;
};

/// Canonical kind order; jumps sort first, negative tests last.
enum class InstrKind : std::uint8_t { Jump, Halt, Plain, PosTest, NegTest };

class Instruction {
 public:
  static Instruction plain(Focus f, Method m);
  static Instruction pos_test(Focus f, Method m);
  static Instruction neg_test(Focus f, Method m);
  static Instruction basic(InstrKind kind, Focus f, Method m);
  static Instruction jump(std::uint32_t label);
  static Instruction halt();

  InstrKind kind() const { return kind_; }
  bool is_basic() const {
    return kind_ == InstrKind::Plain || kind_ == InstrKind::PosTest ||
           kind_ == InstrKind::NegTest;
  }
  bool is_test() const {
    return kind_ == InstrKind::PosTest || kind_ == InstrKind::NegTest;
  }

  // Only meaningful for basic instructions.
  const std::string& focus_name() const { return focus_; }
  Focus focus() const;
  Method method() const { return method_; }
  // Only meaningful for jumps.
  std::uint32_t label() const { return label_; }

  /// Same instruction with another focus; jumps and halt are unchanged.
  Instruction with_focus(const Focus& f) const;

  friend bool operator==(const Instruction&, const Instruction&) = default;
  friend std::strong_ordering operator<=>(const Instruction& a,
                                          const Instruction& b);

 private:
  Instruction(InstrKind kind, std::string focus, Method method,
              std::uint32_t label)
      : kind_(kind), focus_(std::move(focus)), method_(method), label_(label) {}

  InstrKind kind_;
  std::string focus_;
  Method method_;
  std::uint32_t label_;
};

/// PI_br(M) at one focus: f.m, +f.m, -f.m for each m in M, method major.
std::vector<Instruction> enumerate_instructions(MethodSet methods,
                                                const Focus& focus);

/// Non-empty finite instruction sequence.
class InstructionSeq {
 public:
  explicit InstructionSeq(std::vector<Instruction> items);
  InstructionSeq(std::initializer_list<Instruction> items);

  const std::vector<Instruction>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const Instruction& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  /// X ; Y
  InstructionSeq concat(const InstructionSeq& tail) const;

  /// Foci of the basic instructions in order of first occurrence.
  std::vector<Focus> foci() const;

  friend bool operator==(const InstructionSeq&, const InstructionSeq&) = default;
  friend auto operator<=>(const InstructionSeq& a, const InstructionSeq& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<Instruction> items_;
};

/// Errors raised by the library; each carries a stable kind tag.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnsupportedRepetition : public Error {
 public:
  explicit UnsupportedRepetition(std::size_t position)
      : Error("repetition operator '*' is not supported (position " +
              std::to_string(position) + ")") {}
};

// Text syntax:
//   seq   := instr (";" instr)*
//   instr := ("+"|"-")? focus "." method | "#" nat | "!"
InstructionSeq parse_sequence(std::string_view text);
Instruction parse_instruction(std::string_view text);
std::string render_instruction(const Instruction& instr);
std::string render_sequence(const InstructionSeq& seq);

}  // namespace boolreg
