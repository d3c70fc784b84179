#pragma once

// Translation of full register instruction sets into restricted ones.
//
// A TranslationMap sends each register instruction to a sequence over a
// method set M that has the same effect. rewrite_psi_prime lifts it to whole
// sequences, stretching forward jumps over the expanded instructions.
// The fixtures are reference witness maps for five restricted sets.

#include <map>
#include <string>
#include <vector>

#include "boolreg/completeness.hpp"

namespace boolreg {

class MissingMapping : public Error {
 public:
  using Error::Error;
};

/// A reference witness fails its audit; the message names the item.
class FixtureInvalid : public Error {
 public:
  using Error::Error;
};

class TranslationMap {
 public:
  /// Builds the map for method set `methods`: identity on PI_br(M); for an
  /// instruction of a class listed in `class_sequences` (keyed by any
  /// member of the class, at any focus) that sequence; otherwise the least
  /// instruction of PI_br(M) in the same class. Classes with none of these
  /// stay unmapped.
  static TranslationMap build(MethodSet methods,
                              const std::map<Instruction, InstructionSeq>& class_sequences);

  MethodSet methods() const { return methods_; }

  /// Image of `u`; jumps and halt map to themselves. Instructions on other
  /// foci use the image at the search focus, refocused.
  InstructionSeq image(const Instruction& u) const;
  bool has_image(const Instruction& u) const;

  /// Entries at the search focus, keyed by instruction.
  const std::map<Instruction, InstructionSeq>& entries() const { return entries_; }

  /// Longest image length (1 for an empty map).
  std::size_t max_length() const;

 private:
  MethodSet methods_;
  std::map<Instruction, InstructionSeq> entries_;
};

/// psi'(X): register instructions replaced by their images, halts kept,
/// and each #l widened by the growth of the l instructions it passes over.
InstructionSeq rewrite_psi_prime(const InstructionSeq& x, const TranslationMap& psi);

/// Occurrences in `x` of register instructions outside PI_br(M).
std::size_t count_replaced(const InstructionSeq& x, const TranslationMap& psi);

/// One reference witness, e.g. id "c1":
/// psi(+f.if) = +f.ii ; +f.ff ; +f.ff.
struct FixtureItem {
  std::string id;
  Instruction key;
  InstructionSeq witness;
};

/// Reference witness table in item order.
std::vector<FixtureItem> fixture_items();

/// One restricted set of the fixture table: the method set, its strict
/// bound as stated, and the witness slots; each slot lists interchangeable
/// alternatives by item id.
struct FixturePart {
  int part = 0;
  MethodSet methods;
  std::uint32_t stated_k = 0;
  std::vector<std::vector<std::string>> slots;
};

const std::vector<FixturePart>& fixture_parts();

/// Every translation map obtainable by picking one alternative per slot, in
/// odometer order over the slots (first alternatives first).
std::vector<TranslationMap> fixture_maps(const FixturePart& part,
                                         const std::vector<FixtureItem>& items);

/// Part number -> all its maps. Throws FixtureInvalid when an item fails
/// its audit.
std::map<int, std::vector<TranslationMap>> theorem3_fixtures();

/// First-alternative map of a part (the map the CLI uses for "partN").
TranslationMap fixture_map(int part);

struct FixtureCheck {
  std::string id;        // "thm3-fixture-<item>" or "thm3-part<N>"
  bool passed = false;
  std::string detail;
};

/// Audits every item (realizes its key's effect on both routes, stays inside
/// IS_br(M) and within the stated bound of each part using it) and every
/// map of every part (total, each image realizes its key, longest image is
/// exactly the stated bound).
std::vector<FixtureCheck> verify_fixtures(const std::vector<FixtureItem>& items);

}  // namespace boolreg
