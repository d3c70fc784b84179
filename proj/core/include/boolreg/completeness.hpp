#pragma once

// Size-bounded functional completeness of register instruction sets.
//
// A target is one of the 16 effects a single register instruction can have
// (both inputs exit at offset 1 or 2 with some content). A method set M is
// k-size-bounded complete when every target is realized by a sequence of
// length <= k over PI_br(M), jumps and halt at one focus.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolreg/equivalence.hpp"
#include "boolreg/isa.hpp"

namespace boolreg {

inline constexpr int kTargetCount = 16;

/// The focus every single-register search and fixture uses.
const Focus& search_focus();

struct Target {
  EffectSummary summary;

  /// Position in listing order (same order as equivalence_classes()).
  int index() const;
  /// The class representative rendered as an instruction, e.g. "-f.tc".
  std::string code() const;

  static Target of(const Instruction& u);
  static Target from_code(std::string_view code);

  friend bool operator==(const Target&, const Target&) = default;
};

/// The 16 targets in listing order.
const std::array<Target, kTargetCount>& all_targets();

/// summarize(seq) equals the target's summary exactly.
bool realizes(const InstructionSeq& seq, const Target& t);
/// realizes() decided on the thread route (thread extraction, use, apply).
bool realizes_axiomatic(const InstructionSeq& seq, const Target& t);

enum class SearchStrategy : std::uint8_t {
  /// Right-to-left construction keeping one lexicographically least
  /// sequence per vector of suffix effects.
  Deduplicated,
  /// Every sequence of each length in lexicographic order.
  Naive,
};

struct SearchOptions {
  std::uint32_t kmax = 6;
  /// Jump labels range over 0 .. L + label_slack for candidates of length L.
  std::uint32_t label_slack = 1;
  SearchStrategy strategy = SearchStrategy::Deduplicated;
};

/// Largest kmax the deduplicating search supports.
inline constexpr std::uint32_t kMaxSearchLength = 12;

/// Candidate alphabet for length L in canonical instruction order:
/// #0 .. #(L + label_slack), !, then PI_br(M) at the search focus.
std::vector<Instruction> search_alphabet(MethodSet methods, std::uint32_t length,
                                         std::uint32_t label_slack);

/// Shortest, then lexicographically least, witness for each target in
/// `wanted` (all targets when empty); nullopt when none has length <= kmax.
std::array<std::optional<InstructionSeq>, kTargetCount> search_witnesses(
    MethodSet methods, const SearchOptions& options,
    const std::vector<int>& wanted = {});

std::optional<InstructionSeq> find_witness(
    MethodSet methods, const Target& t, std::uint32_t kmax,
    SearchStrategy strategy = SearchStrategy::Deduplicated);

/// Submonoid of unary functions generated by the transforms of `methods`
/// (identity included), in canonical order.
std::vector<UnaryFn> transform_monoid(MethodSet methods);

struct Certificate {
  enum class Kind : std::uint8_t { Unwritable, InputBlindBranching };
  Kind kind = Kind::Unwritable;
  // Unwritable only: content `required` cannot be produced from `input`.
  bool input = false;
  bool required = false;

  std::string to_string() const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// A sound reason why no sequence over `methods` realizes `t`, if one of the
/// two supported arguments applies.
std::optional<Certificate> incompleteness_certificate(MethodSet methods,
                                                      const Target& t);

struct Witness {
  Target target;
  InstructionSeq sequence;
};

struct Verdict {
  enum class Kind : std::uint8_t { Bound, CertifiedIncomplete, UnknownBeyond };
  Kind kind = Kind::UnknownBeyond;
  /// Bound: the strict bound k. UnknownBeyond: the search cap.
  std::uint32_t k = 0;
  /// Bound: one witness per target. UnknownBeyond: resolved targets only.
  std::vector<Witness> witnesses;
  /// CertifiedIncomplete only.
  std::optional<Target> target;
  std::optional<Certificate> certificate;

  std::string to_string() const;
};

Verdict strict_bound(MethodSet methods, const SearchOptions& options);

}  // namespace boolreg
