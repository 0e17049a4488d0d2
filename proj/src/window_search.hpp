#pragma once

// Backtracking engines behind the searchgen API. Letters are 1-based at this
// interface; internally the engines index tables with 0-based letters.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ucycle/core.hpp"
#include "ucycle/verify.hpp"

namespace ucycle::detail {

// Node counter shared by every search that draws on the same allowance.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) noexcept : limit_(limit) {}

  bool take() noexcept { return used_.fetch_add(1, std::memory_order_relaxed) < limit_; }
  std::uint64_t used() const noexcept {
    const auto u = used_.load(std::memory_order_relaxed);
    return u < limit_ ? u : limit_;
  }
  std::uint64_t limit() const noexcept { return limit_; }
  bool spent() const noexcept { return used_.load(std::memory_order_relaxed) >= limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

// Maps an ordered t-tuple of 0-based letters to the colex rank of its
// multiset (or subset) in the family, or -1 when the tuple is not a member
// (a repeated letter in the subset family).
class WindowTable {
 public:
  WindowTable(int n, int t, Family family);

  int n() const noexcept { return n_; }
  int t() const noexcept { return t_; }
  std::size_t universe() const noexcept { return universe_; }

  std::int32_t id(const int* tuple) const noexcept {
    std::size_t idx = 0;
    for (int i = 0; i < t_; ++i) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(tuple[i]);
    return ids_[idx];
  }

 private:
  int n_;
  int t_;
  std::size_t universe_;
  std::vector<std::int32_t> ids_;
};

enum class SearchEnd { explored, stopped, budget };

struct FullSearchSpec {
  int n = 0;
  int t = 0;
  Family family = Family::multiset;
  std::size_t length = 0;
  // Both empty: the word is read cyclically. Otherwise both hold t-1 letters
  // and the windows are those of before + word + after that touch the word.
  std::vector<Letter> before;
  std::vector<Letter> after;
  std::vector<Letter> prefix;
  std::vector<Letter> suffix;
  // target[rank] != 0 for every key that must be covered exactly once.
  std::vector<char> target;
  // Upper bound on occurrences of any single letter; 0 disables the check.
  std::uint64_t freq_cap = 0;
  // Candidate letters, ascending. Empty means 1..n.
  std::vector<Letter> alphabet;
};

using Visitor = std::function<bool(std::span<const Letter>)>;

// Depth-first extension, children in ascending letter order. A branch is cut
// as soon as its newest window is outside the target or already used, or a
// letter exceeds freq_cap. `visit` sees each solution in lexicographic order
// and returns false to stop.
SearchEnd run_full_search(const FullSearchSpec& spec, NodeBudget& budget, const Visitor& visit);

struct ShiftSearchSpec {
  int n = 0;
  int t = 0;
  Family family = Family::multiset;
  std::vector<Letter> prefix;
  std::vector<Letter> suffix;
};

struct ShiftWitness {
  std::vector<Letter> word;
  int shift = 0;
  std::size_t period = 0;
};

// Looks for a ucycle with a[i + m] = a[i] + s (mod n), m = |family| / n. Each
// window of the first period then stands for a whole orbit of the cyclic
// shift on [n], so only m letters are searched. Needs every orbit to have
// exactly n members; returns nullopt immediately otherwise. Attempts restart
// over (budget doubling, s, first free letter) until one succeeds, the
// restricted space is exhausted, or the budget runs out.
std::optional<ShiftWitness> run_shift_search(const ShiftSearchSpec& spec, NodeBudget& budget);

}  // namespace ucycle::detail
