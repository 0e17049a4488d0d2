#pragma once

// 3-multiset ucycles from 3-subset ucycles (even n, 3 does not divide n):
// double the first occurrence of most adjacent pairs, then append the
// tripled letters of an anchor permutation. Also the t = 2 analogue.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ucycle/core.hpp"

namespace ucycle {

// Repeats the first occurrence of every letter of a 2-subset ucycle, giving
// a 2-multiset ucycle. Throws InfeasibleError if the input does not verify.
CycleWord double_letters_2(const CycleWord& subset_cycle);

struct PairOccurrenceIndex {
  int n = 0;
  // Position i of the first adjacent occurrence X[i], X[i+1], no wrap.
  std::map<PairSet::Pair, std::size_t> first_occurrence;
  // Adjacent somewhere in the cycle, wrap included.
  PairSet present;
  PairSet missing;
};

// Throws InfeasibleError("input is not a valid 3-subset ucycle") when X does
// not verify or its missing pairs share a letter.
PairOccurrenceIndex pair_index(const CycleWord& X);

struct AnchorPermutation {
  std::vector<Letter> x;

  // {x1,x2}, {x2,x3}, ..., {xn,x1}
  PairSet chain() const;
};

// Least x (lexicographically) with x1 = X.front(), xn = X.back() and every
// missing pair among {x1,x2}, {x3,x4}, ... Throws PreconditionError for odd
// n and InfeasibleError when no such x exists.
AnchorPermutation choose_permutation(const CycleWord& X, const PairOccurrenceIndex& idx);

// w[0..i+1] + w[i] w[i+1] + w[i+2..]; i + 1 < w.size().
CycleWord double_pair_at(const CycleWord& w, std::size_t i);

// First-occurrence positions of the present pairs outside perm's chain,
// ascending.
std::vector<std::size_t> doubling_positions(const PairOccurrenceIndex& idx,
                                            const AnchorPermutation& perm);

// Doubles every position from doubling_positions, right to left.
CycleWord double_pairs(const CycleWord& X, const AnchorPermutation& perm,
                       const PairOccurrenceIndex& idx);

// Xp + x1x1x1 x2x2x2 ... xnxnxn. Throws InfeasibleError when the result is
// not a 3-multiset ucycle.
CycleWord append_triples(const CycleWord& Xp, const AnchorPermutation& perm);

struct DoublingTrace {
  CycleWord x;  // the subset cycle actually used (possibly rotated)
  PairOccurrenceIndex index;
  AnchorPermutation perm;
  CycleWord x_prime;
  CycleWord x_double_prime;
};

// n even, n >= 8, 3 does not divide n. The subset cycle comes from
// subset_input (verified, never rotated) or from the search, rotated to the
// first position where choose_permutation succeeds.
// 3 | n: InadmissibleError; odd or small n: PreconditionError.
DoublingTrace construct_doubling_traced(int n, const std::optional<CycleWord>& subset_input = {},
                                        std::uint64_t search_budget = 10'000'000);
CycleWord construct_doubling(int n, const std::optional<CycleWord>& subset_input = {},
                             std::uint64_t search_budget = 10'000'000);

}  // namespace ucycle
