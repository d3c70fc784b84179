#pragma once

// Effect summaries and the two equivalences built on them: effectual
// equivalence of single instructions and functional equivalence of
// sequences. Also the partition of the 48 register instructions into
// effect classes, the axiom system for that partition, and the minimal
// method sets that hit every class.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "boolreg/isa.hpp"
#include "boolreg/semantics.hpp"

namespace boolreg {

/// What running a sequence from its first instruction does for one input.
struct Outcome {
  enum class Kind : std::uint8_t { Deadlock, Halted, Exit };

  Kind kind = Kind::Deadlock;
  bool content = false;       // Halted, Exit
  std::uint32_t offset = 0;   // Exit: control moves to the offset-th
                              // instruction after the end (>= 1)

  static Outcome deadlock() { return {}; }
  static Outcome halted(bool c) { return {Kind::Halted, c, 0}; }
  static Outcome exit(std::uint32_t d, bool c);

  std::string to_string() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend auto operator<=>(const Outcome&, const Outcome&) = default;
};

struct EffectSummary {
  Outcome on0;
  Outcome on1;

  const Outcome& on(bool b) const { return b ? on1 : on0; }
  std::string to_string() const;

  friend bool operator==(const EffectSummary&, const EffectSummary&) = default;
  friend auto operator<=>(const EffectSummary&, const EffectSummary&) = default;
};

class ForeignFocus : public Error {
 public:
  using Error::Error;
};
class FocusMismatch : public Error {
 public:
  using Error::Error;
};
class FociIncomplete : public Error {
 public:
  using Error::Error;
};

/// Runs `seq` on f -> BR^{all}_b for b = 0, 1. Requires every basic
/// instruction of `seq` to use focus f.
EffectSummary summarize(const InstructionSeq& seq, const Focus& f);

/// Same observable computed through thread extraction, use and apply on
/// seq ; !^n for n = 0..max_halts. Exits beyond max_halts read as deadlock.
EffectSummary observe_summary(const InstructionSeq& seq, const Focus& f,
                              std::uint32_t max_halts);

/// u and v are register instructions (no jump, no halt) on one focus.
bool eeqv(const Instruction& u, const Instruction& v);

struct EquivalenceClass {
  Instruction representative;
  std::vector<Instruction> members;  // canonical instruction order
  EffectSummary summary;
};

/// The 16 classes of the 48 instructions at `f`, in the listing order
/// fixed by class_representatives().
std::vector<EquivalenceClass> equivalence_classes(const Focus& f);

/// Designated representative of each class, in listing order. Every one
/// uses a method of canonical_base().
std::vector<Instruction> class_representatives(const Focus& f);

/// Ground instances of the effect axioms and the partition they generate.
enum class AxiomSchema : std::uint8_t {
  PosFalseNegTrue,   // +f.m(F,p) = -f.m(T,p)
  PosTrueNegFalse,   // +f.m(T,p) = -f.m(F,p)
  PosIdNegCompl,     // +f.m(I,p) = -f.m(C,p)
  PosComplNegId,     // +f.m(C,p) = -f.m(I,p)
  PosTrueIsPlain,    // +f.m(T,p) = f.m(q,p)
};
inline constexpr int kAxiomSchemaCount = 5;

struct AxiomReport {
  std::size_t instances = 0;
  std::vector<std::string> violations;        // unsound instances
  std::size_t closure_classes = 0;
  bool closure_matches_partition = false;     // completeness
  /// Closure partition is a refinement of the computed one.
  bool closure_refines_partition = false;

  bool sound() const { return violations.empty(); }
};

/// Checks soundness of every ground instance of the enabled schemas and
/// compares their equivalence closure with the computed partition.
AxiomReport check_axioms(const std::vector<AxiomSchema>& schemas);
AxiomReport check_axioms();

/// All inclusion-minimal method sets whose instructions meet every class,
/// sorted by mask.
std::vector<MethodSet> minimal_method_sets();

/// Minimal transversals of a family of subsets of {0..15} given as masks,
/// by Berge's incremental algorithm. Sorted by mask.
std::vector<std::uint16_t> minimal_hitting_sets(
    const std::vector<std::uint16_t>& sets);

/// Functional equivalence over every content assignment to `foci`.
/// Throws FociIncomplete if X or Y mentions a focus outside `foci`, and
/// Error for more than 16 foci.
bool feqv(const InstructionSeq& x, const InstructionSeq& y,
          const std::vector<Focus>& foci);

/// feqv computed on the thread route instead of run_positional.
bool feqv_axiomatic(const InstructionSeq& x, const InstructionSeq& y,
                    const std::vector<Focus>& foci);

}  // namespace boolreg
