#include "ucycle/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ucycle {

CycleWord::CycleWord(int alphabet_size, std::vector<Letter> letters)
    : n_(alphabet_size), letters_(std::move(letters)) {
  if (n_ < 1) throw std::invalid_argument("alphabet size must be positive");
  if (letters_.empty()) throw std::invalid_argument("cycle word must be non-empty");
  for (Letter x : letters_) {
    if (x < 1 || x > n_) {
      throw std::invalid_argument("letter " + std::to_string(x) + " outside 1.." +
                                  std::to_string(n_));
    }
  }
}

MultisetKey::MultisetKey(std::vector<Letter> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
}

bool MultisetKey::has_repeat() const noexcept {
  return std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end();
}

std::size_t MultisetKey::count(Letter x) const noexcept {
  return static_cast<std::size_t>(std::count(elems_.begin(), elems_.end(), x));
}

std::string MultisetKey::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elems_[i]);
  }
  return s + "}";
}

std::size_t MultisetKeyHash::operator()(const MultisetKey& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter x : k.elements()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

bool PairSet::is_matching() const {
  std::set<Letter> seen;
  for (const auto& [x, y] : pairs_) {
    if (x == y) return false;
    if (!seen.insert(x).second || !seen.insert(y).second) return false;
  }
  return true;
}

std::string PairSet::to_string() const {
  std::string s;
  for (const auto& [x, y] : pairs_) {
    if (!s.empty()) s += ' ';
    s += "{" + std::to_string(x) + "," + std::to_string(y) + "}";
  }
  return s;
}

namespace {

std::vector<MultisetKey> windows(const CycleWord& word, int t, bool cyclic) {
  if (t < 1) throw std::invalid_argument("window size must be positive");
  const std::size_t k = word.size();
  const auto tt = static_cast<std::size_t>(t);
  if (k < tt) throw std::invalid_argument("word shorter than window");
  const std::size_t count = cyclic ? k : k - tt + 1;
  std::vector<MultisetKey> out;
  out.reserve(count);
  std::vector<Letter> buf(tt);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < tt; ++j) buf[j] = word.cyclic_at(i + j);
    out.emplace_back(buf);
  }
  return out;
}

// Relabels by order of first appearance, starting at offset `start`.
void first_occurrence_form(std::span<const Letter> w, std::size_t start,
                           std::vector<Letter>& map, std::vector<Letter>& out) {
  std::fill(map.begin(), map.end(), 0);
  Letter next = 1;
  const std::size_t k = w.size();
  for (std::size_t i = 0; i < k; ++i) {
    Letter x = w[(start + i) % k];
    if (map[static_cast<std::size_t>(x)] == 0) map[static_cast<std::size_t>(x)] = next++;
    out[i] = map[static_cast<std::size_t>(x)];
  }
}

std::vector<Letter> least_form(std::span<const Letter> w, int n) {
  const std::size_t k = w.size();
  std::vector<Letter> map(static_cast<std::size_t>(n) + 1);
  std::vector<Letter> best(k), cur(k);
  first_occurrence_form(w, 0, map, best);
  for (std::size_t r = 1; r < k; ++r) {
    first_occurrence_form(w, r, map, cur);
    if (cur < best) best.swap(cur);
  }
  return best;
}

}  // namespace

std::vector<MultisetKey> cyclic_windows(const CycleWord& word, int t) {
  return windows(word, t, true);
}

std::vector<MultisetKey> linear_windows(const CycleWord& word, int t) {
  return windows(word, t, false);
}

CycleWord relabel(const CycleWord& word, const std::map<Letter, Letter>& map,
                  int out_alphabet) {
  std::vector<Letter> out;
  out.reserve(word.size());
  for (Letter x : word.letters()) {
    auto it = map.find(x);
    out.push_back(it == map.end() ? x : it->second);
  }
  return CycleWord(out_alphabet, std::move(out));
}

CycleWord rotate(const CycleWord& word, std::size_t k) {
  std::vector<Letter> out(word.letters().begin(), word.letters().end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()),
              out.end());
  return CycleWord(word.alphabet_size(), std::move(out));
}

CycleWord reversed(const CycleWord& word) {
  std::vector<Letter> out(word.letters().rbegin(), word.letters().rend());
  return CycleWord(word.alphabet_size(), std::move(out));
}

CycleWord concat(const CycleWord& a, const CycleWord& b, int alphabet_size) {
  return concat({std::cref(a), std::cref(b)}, alphabet_size);
}

CycleWord concat(std::initializer_list<std::reference_wrapper<const CycleWord>> parts,
                 int alphabet_size) {
  int n = alphabet_size;
  std::vector<Letter> out;
  for (const CycleWord& p : parts) {
    if (alphabet_size == 0) n = std::max(n, p.alphabet_size());
    out.insert(out.end(), p.letters().begin(), p.letters().end());
  }
  return CycleWord(n, std::move(out));
}

CanonicalClass canonicalize(const CycleWord& word) {
  return {CycleWord(word.alphabet_size(), least_form(word.letters(), word.alphabet_size()))};
}

CanonicalClass canonicalize_with_reflection(const CycleWord& word) {
  auto fwd = least_form(word.letters(), word.alphabet_size());
  std::vector<Letter> rev(word.letters().rbegin(), word.letters().rend());
  auto bwd = least_form(rev, word.alphabet_size());
  return {CycleWord(word.alphabet_size(), std::min(fwd, bwd))};
}

std::string to_string(const CycleWord& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << word[i];
  }
  return os.str();
}

std::string to_compact(const CycleWord& word) {
  if (word.alphabet_size() > 10) {
    throw std::invalid_argument("compact form needs an alphabet of at most 10 letters");
  }
  std::string s;
  s.reserve(word.size());
  for (Letter x : word.letters()) s += x == 10 ? '0' : static_cast<char>('0' + x);
  return s;
}

CycleWord parse_compact(int alphabet_size, std::string_view digits) {
  std::vector<Letter> out;
  for (char c : digits) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c < '0' || c > '9') throw std::invalid_argument("non-digit in compact word");
    out.push_back(c == '0' ? 10 : c - '0');
  }
  return CycleWord(alphabet_size, std::move(out));
}

}  // namespace ucycle
