#pragma once

// Backtracking search for ucycles: witnesses for the constructions, and
// exhaustive enumeration for counting distinct cycles.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ucycle/core.hpp"
#include "ucycle/verify.hpp"

namespace ucycle {

inline constexpr std::uint64_t kDefaultWitnessBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultCountBudget = 100'000'000;

struct SearchConstraints {
  std::vector<Letter> required_prefix;
  std::vector<Letter> required_suffix;
  // Keys to cover exactly once (cyclically). Defaults to the whole family.
  std::optional<std::vector<MultisetKey>> coverage_target;
  std::uint64_t node_budget = kDefaultWitnessBudget;
};

struct SearchOutcome {
  CycleWord word;
  std::uint64_t nodes = 0;
  // "shift s=<s> period=<m>" or "full-dfs".
  std::string strategy;
};

// Every returned word has passed the verifier. Deterministic for fixed
// arguments. Throws InadmissibleError, PreconditionError, InfeasibleError
// (search space exhausted without a witness) or BudgetExhausted.
SearchOutcome find_ucycle(int n, int t, Family family, const SearchConstraints& constraints = {});

CycleWord generate_subset_ucycle(int n, int t, const SearchConstraints& constraints = {});
CycleWord find_multiset_ucycle(int n, int t, const SearchConstraints& constraints = {});

// Finds w so that every window of before + w + after touching w is a
// distinct member of target, and every target key appears. before and
// after hold t-1 letters each; |w| = |target| - (t-1). Candidate letters are
// those occurring in target.
SearchOutcome fill_gap(int n, int t, std::span<const Letter> before, std::span<const Letter> after,
                       const std::vector<MultisetKey>& target,
                       std::uint64_t node_budget = kDefaultWitnessBudget);

struct CountOptions {
  std::uint64_t node_budget = kDefaultCountBudget;
  // Fix the cycle to start with the window {1,...,1}, so each cycle is met
  // in exactly one rotation. Unanchored runs meet every rotation.
  bool anchored = true;
  // Worker threads splitting the top-level branches. Results do not depend
  // on this.
  unsigned threads = 1;
};

struct CountResult {
  int n = 0;
  int t = 0;
  std::uint64_t count_rot_relabel = 0;
  std::uint64_t count_also_reflect = 0;
  bool exhausted = false;
  std::uint64_t nodes_visited = 0;
};

// Counts multiset ucycles up to rotation and relabeling (and additionally up
// to reflection). Counts are only meaningful when exhausted is true.
// Inadmissible (n, t) gives zero counts with exhausted = true.
CountResult count_distinct(int n, int t, const CountOptions& options = {});
CountResult count_distinct(int n, int t, std::uint64_t node_budget);

// "n t count_rot_relabel count_also_reflect exhausted nodes_visited"
std::string format_count(const CountResult& r);

// Calls sink with each new canonical class in discovery order, at most limit
// times. Returns the number emitted.
std::size_t enumerate_ucycles(int n, int t, std::size_t limit,
                              const std::function<void(const CanonicalClass&)>& sink,
                              std::uint64_t node_budget = kDefaultCountBudget);
std::vector<CanonicalClass> enumerate_ucycles(int n, int t, std::size_t limit,
                                              std::uint64_t node_budget = kDefaultCountBudget);

}  // namespace ucycle
