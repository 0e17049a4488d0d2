#pragma once

// 3-multiset ucycles over [n], n = 1 (mod 3), grown three letters at a time
// from a fixed base cycle over [7].

#include <cstdint>
#include <string>
#include <vector>

#include "ucycle/core.hpp"

namespace ucycle {

// a..f = n-5 .. n.
struct SpecialLetters {
  Letter a, b, c, d, e, f;

  explicit SpecialLetters(int n) : a(n - 5), b(n - 4), c(n - 3), d(n - 2), e(n - 1), f(n) {}
  // 'a'..'f' to its letter.
  Letter operator()(char name) const;
};

// The 3-multisets over [n], split by how they meet low = [n-6],
// mid = {a,b,c} and high = {d,e,f}:
//   A  no high letter (all of [n-3])
//   B  no mid letter, at least one high
//   C  no low letter, one or two mid, one or two high
//   D  one of each
struct PartitionABCD {
  int n = 0;
  std::vector<MultisetKey> A, B, C, D;
};

// Throws PreconditionError unless n >= 10 and n = 1 (mod 3).
PartitionABCD partition_abcd(int n);

enum class StepPath { pattern, repaired };
const char* to_string(StepPath p) noexcept;

struct StepRecord {
  int n = 0;  // alphabet after the step
  StepPath path = StepPath::pattern;
  std::uint64_t repair_nodes = 0;
};

// n is the alphabet of s_part + t_part, which is a ucycle over [n].
// t_part starts 1,1 and ends n, n-1.
struct InductionState {
  int n = 0;
  CycleWord s_part;
  CycleWord t_part;
  std::vector<StepRecord> provenance;

  CycleWord cycle() const;
};

// n = 7: s_part = S over [4], t_part = T over [7] (with the transposition in
// the transposition in the reference T undone, see golden.hpp).
InductionState base_case();

// 29 letters, fixed pattern over a..f.
CycleWord build_u(int n);
// Three blocks with prefix pairs (be,af), (ad,ce), (cf,bd); each block runs
// k = n-6 .. 1, every k preceded by a pair, alternating so that the pair
// before k = 1 is the second of the two, and closes with the first pair.
// Then e. Length 9n - 47.
CycleWord build_v(int n);

// One step from [n] to [n+3]: s' = s + t, t' = relabel(t) + U + V. When the
// assembled cycle does not verify, U is replaced by a searched word covering
// exactly the multisets nothing else provides (InfeasibleError or
// BudgetExhausted on failure, naming that residual).
InductionState extend(const InductionState& state,
                      std::uint64_t repair_budget = 10'000'000);

// n = 4: S; n = 7: S + T; n >= 10: base_case() extended up to n.
// Throws PreconditionError for any other n.
CycleWord construct_inductive(int n, std::uint64_t repair_budget = 10'000'000);
// The final state and its step records; n >= 7.
InductionState construct_inductive_traced(int n, std::uint64_t repair_budget = 10'000'000);

// One line per step: "n=<n> path=<pattern|repaired>".
std::string format_provenance(const std::vector<StepRecord>& steps);

}  // namespace ucycle
