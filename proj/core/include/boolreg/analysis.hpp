#pragma once

// Whole-family completeness studies: every subset of a base method set, and
// the two-condition corollary over subsets of {ff,tt,ii,cc,if,it}.

#include <cstdint>
#include <string>
#include <vector>

#include "boolreg/completeness.hpp"

namespace boolreg {

struct SweepEntry {
  MethodSet methods;
  Verdict verdict;
};

/// Non-empty subsets of `base` in subset-bitmask order, where bit i stands
/// for the i-th method of `base` in index order. `jobs` worker threads (0 =
/// hardware concurrency); the result does not depend on it.
std::vector<SweepEntry> sweep_subsets(MethodSet base, const SearchOptions& options,
                                      unsigned jobs = 0);

struct CorollaryEntry {
  MethodSet methods;
  int condition = 0;          // 1 or 2
  std::uint32_t expected = 0; // 4 for condition 1, 3 for condition 2
  Verdict verdict;
  bool matches = false;
};

struct CorollaryReport {
  std::vector<CorollaryEntry> entries;  // subset-bitmask order over the 6-set
  std::size_t covered = 0;
  std::size_t stated = 44;
  std::vector<std::string> mismatches;  // "<methods>: expected Bound(k), got ..."
  bool count_matches() const { return covered == stated; }
};

/// Proper subsets of {ff,tt,ii,cc,if,it} meeting either condition, each
/// solved at `kmax`.
CorollaryReport corollary3_check(std::uint32_t kmax = 5, unsigned jobs = 0);

/// Condition (1 or 2) a subset of the 6-set meets, 0 for neither.
int corollary3_condition(MethodSet m);

/// Subsets of `base` (bit i = i-th method of `base`), mask 1 .. 2^n - 1.
std::vector<MethodSet> subsets_of(MethodSet base);

}  // namespace boolreg
