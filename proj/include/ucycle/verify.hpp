#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ucycle/core.hpp"

namespace ucycle {

// Which window collection a cycle is checked against.
enum class Family { multiset, subset };

const char* to_string(Family f) noexcept;

// n | C(n+t-1, t). Exact for every n, t.
bool admissible_multiset(int n, int t);
// n | C(n, t). False when t > n.
bool admissible_subset(int n, int t);
bool admissible(int n, int t, Family family);

// C(n+t-1, t) or C(n, t).
std::uint64_t family_size(int n, int t, Family family);

struct VerificationReport {
  Family family = Family::multiset;
  int n = 0;
  int t = 0;
  bool ok = false;
  std::uint64_t expected_length = 0;
  std::uint64_t actual_length = 0;
  std::vector<MultisetKey> missing;
  std::vector<std::pair<MultisetKey, std::size_t>> duplicated;
  // Subset checks only: windows with a repeated letter, with multiplicity.
  std::vector<std::pair<MultisetKey, std::size_t>> invalid;
  // frequency_table[x] = occurrences of letter x; index 0 unused.
  std::vector<std::uint64_t> frequency_table;
  // Every letter occurs expected_length / n times.
  bool uniform_frequency = false;
};

// Cyclic windows against every t-multiset over [word.alphabet_size()].
VerificationReport verify_multiset_ucycle(const CycleWord& word, int t);

// As above against the t-subsets; a window with a repeated letter is reported
// under `invalid` and makes the report fail.
VerificationReport verify_subset_ucycle(const CycleWord& word, int t);

VerificationReport verify_ucycle(const CycleWord& word, int t, Family family);

// "key: value" lines. Missing/duplicate listings stop after display_limit
// entries.
std::string format_report(const VerificationReport& report, std::size_t display_limit = 50);

}  // namespace ucycle
