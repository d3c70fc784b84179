#include <cctype>
#include <charconv>

#include "boolreg/isa.hpp"

namespace boolreg {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Instruction instruction() {
    const char c = peek();
    if (c == '*' || c == '(' || c == ')') reject_repetition();
    if (c == '!') {
      ++pos_;
      return Instruction::halt();
    }
    if (c == '#') {
      ++pos_;
      return Instruction::jump(natural());
    }
    InstrKind kind = InstrKind::Plain;
    if (c == '+' || c == '-') {
      kind = c == '+' ? InstrKind::PosTest : InstrKind::NegTest;
      ++pos_;
    }
    std::string focus = identifier();
    expect('.');
    return Instruction::basic(kind, Focus(std::move(focus)), method());
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, pos_);
  }

  [[noreturn]] void reject_repetition() const {
    const std::size_t star = text_.find('*');
    throw UnsupportedRepetition(star == std::string_view::npos ? pos_ : star);
  }

  bool contains_star() const { return text_.find('*') != std::string_view::npos; }

 private:
  std::uint32_t natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected jump label");
    std::uint32_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("jump label out of range");
    }
    return value;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected focus");
    }
    while (pos_ < text_.size() &&
           (std::islower(static_cast<unsigned char>(text_[pos_])) ||
            std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Method method() {
    skip_space();
    auto is_code = [](char c) {
      return c == 'f' || c == 't' || c == 'i' || c == 'c';
    };
    if (pos_ + 2 > text_.size() || !is_code(text_[pos_]) ||
        !is_code(text_[pos_ + 1])) {
      fail("expected two-letter method code over {f,t,i,c}");
    }
    Method m{fn_from_code(text_[pos_]), fn_from_code(text_[pos_ + 1])};
    pos_ += 2;
    if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      fail("method code must have exactly two letters");
    }
    return m;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

InstructionSeq parse_sequence(std::string_view text) {
  Lexer lex(text);
  // Scope marker: anything using '*' is a repetition term.
  if (lex.contains_star()) lex.reject_repetition();
  std::vector<Instruction> items;
  items.push_back(lex.instruction());
  while (!lex.at_end()) {
    lex.expect(';');
    items.push_back(lex.instruction());
  }
  return InstructionSeq(std::move(items));
}

Instruction parse_instruction(std::string_view text) {
  Lexer lex(text);
  if (lex.contains_star()) lex.reject_repetition();
  Instruction u = lex.instruction();
  if (!lex.at_end()) lex.fail("trailing input after instruction");
  return u;
}

std::string render_instruction(const Instruction& instr) {
  switch (instr.kind()) {
    case InstrKind::Jump: return "#" + std::to_string(instr.label());
    case InstrKind::Halt: return "!";
    case InstrKind::Plain: return instr.focus_name() + "." + instr.method().code();
    case InstrKind::PosTest:
      return "+" + instr.focus_name() + "." + instr.method().code();
    case InstrKind::NegTest:
      return "-" + instr.focus_name() + "." + instr.method().code();
  }
  return {};
}

std::string render_sequence(const InstructionSeq& seq) {
  std::string out;
  for (const Instruction& u : seq) {
    if (!out.empty()) out += " ; ";
    out += render_instruction(u);
  }
  return out;
}

}  // namespace boolreg
