#pragma once

// Cycle words, window keys and canonical forms.
//
// Letters are the integers 1..n. A CycleWord can be read cyclically (windows
// wrap around the end) or linearly; the word itself does not pick one.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ucycle {

using Letter = int;

class CycleWord {
 public:
  // Throws std::invalid_argument if letters is empty or a letter lies
  // outside 1..alphabet_size.
  CycleWord(int alphabet_size, std::vector<Letter> letters);

  int alphabet_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const std::vector<Letter>& vec() const noexcept { return letters_; }

  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter cyclic_at(std::size_t i) const { return letters_[i % letters_.size()]; }

  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  friend bool operator==(const CycleWord&, const CycleWord&) = default;
  friend auto operator<=>(const CycleWord& a, const CycleWord& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  int n_;
  std::vector<Letter> letters_;
};

// A t-multiset stored as its sorted tuple. Two windows hold the same
// multiset iff their keys compare equal.
class MultisetKey {
 public:
  MultisetKey() = default;
  explicit MultisetKey(std::vector<Letter> elements);
  MultisetKey(std::initializer_list<Letter> elements)
      : MultisetKey(std::vector<Letter>(elements)) {}

  std::span<const Letter> elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  Letter operator[](std::size_t i) const { return elems_[i]; }

  bool has_repeat() const noexcept;
  std::size_t count(Letter x) const noexcept;
  bool contains(Letter x) const noexcept { return count(x) > 0; }

  // "{1,1,3}"
  std::string to_string() const;

  friend bool operator==(const MultisetKey&, const MultisetKey&) = default;
  friend auto operator<=>(const MultisetKey&, const MultisetKey&) = default;

 private:
  std::vector<Letter> elems_;
};

struct MultisetKeyHash {
  std::size_t operator()(const MultisetKey& k) const noexcept;
};

// Set of unordered letter pairs; {x,y} and {y,x} are the same element.
class PairSet {
 public:
  using Pair = std::pair<Letter, Letter>;  // first <= second

  static Pair normalize(Letter x, Letter y) noexcept {
    return x <= y ? Pair{x, y} : Pair{y, x};
  }

  bool insert(Letter x, Letter y) { return pairs_.insert(normalize(x, y)).second; }
  bool erase(Letter x, Letter y) { return pairs_.erase(normalize(x, y)) > 0; }
  bool contains(Letter x, Letter y) const { return pairs_.contains(normalize(x, y)); }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  // True when no letter belongs to two pairs.
  bool is_matching() const;

  // "{1,5} {2,6}"
  std::string to_string() const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::set<Pair> pairs_;
};

// Least representative over all rotations and letter relabelings.
struct CanonicalClass {
  CycleWord representative;

  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
  friend auto operator<=>(const CanonicalClass&, const CanonicalClass&) = default;
};

// Key i is the multiset of positions i..i+t-1, indices taken mod size().
// Throws std::invalid_argument("word shorter than window") if size() < t.
std::vector<MultisetKey> cyclic_windows(const CycleWord& word, int t);

// size() - t + 1 keys, no wrap-around.
std::vector<MultisetKey> linear_windows(const CycleWord& word, int t);

// Characterwise substitution. Letters outside the map's domain pass through.
// Throws std::invalid_argument if a result letter falls outside
// 1..out_alphabet.
CycleWord relabel(const CycleWord& word, const std::map<Letter, Letter>& map,
                  int out_alphabet);

// Left rotation: rotate(w, k)[0] == w[k mod size].
CycleWord rotate(const CycleWord& word, std::size_t k);
CycleWord reversed(const CycleWord& word);

// Concatenation over the given alphabet (defaults to the larger of the two).
CycleWord concat(const CycleWord& a, const CycleWord& b, int alphabet_size = 0);
CycleWord concat(std::initializer_list<std::reference_wrapper<const CycleWord>> parts,
                 int alphabet_size = 0);

CanonicalClass canonicalize(const CycleWord& word);

// Canonical form when reading the cycle backwards is also identified.
CanonicalClass canonicalize_with_reflection(const CycleWord& word);

// Space separated letters: "1 1 1 4 4".
std::string to_string(const CycleWord& word);

// One character per letter, "0" standing for 10. Requires alphabet <= 10.
std::string to_compact(const CycleWord& word);

// Inverse of to_compact; whitespace is ignored.
CycleWord parse_compact(int alphabet_size, std::string_view digits);

}  // namespace ucycle
