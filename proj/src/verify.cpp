#include "ucycle/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ucycle/combinatorics.hpp"

namespace ucycle {

const char* to_string(Family f) noexcept {
  return f == Family::multiset ? "multiset" : "subset";
}

bool admissible_multiset(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("admissible_multiset: n, t >= 1");
  const auto c = binomial_exact(static_cast<unsigned>(n + t - 1), static_cast<unsigned>(t));
  return c % n == 0;
}

bool admissible_subset(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("admissible_subset: n, t >= 1");
  if (t > n) return false;
  const auto c = binomial_exact(static_cast<unsigned>(n), static_cast<unsigned>(t));
  return c % n == 0;
}

bool admissible(int n, int t, Family family) {
  return family == Family::multiset ? admissible_multiset(n, t) : admissible_subset(n, t);
}

std::uint64_t family_size(int n, int t, Family family) {
  return family == Family::multiset ? multiset_count(n, t) : subset_count(n, t);
}

VerificationReport verify_ucycle(const CycleWord& word, int t, Family family) {
  if (t < 1) throw std::invalid_argument("window size must be positive");
  const int n = word.alphabet_size();
  VerificationReport r;
  r.family = family;
  r.n = n;
  r.t = t;
  r.expected_length = family_size(n, t, family);
  r.actual_length = word.size();

  r.frequency_table.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Letter x : word.letters()) ++r.frequency_table[static_cast<std::size_t>(x)];

  std::vector<std::size_t> counts(r.expected_length, 0);
  std::map<MultisetKey, std::size_t> invalid;
  if (word.size() >= static_cast<std::size_t>(t)) {
    for (const MultisetKey& key : cyclic_windows(word, t)) {
      if (family == Family::subset && key.has_repeat()) {
        ++invalid[key];
        continue;
      }
      const auto rank = family == Family::multiset ? rank_multiset(key.elements())
                                                   : rank_subset(key.elements());
      ++counts[rank];
    }
  }

  for (std::uint64_t rank = 0; rank < counts.size(); ++rank) {
    const auto c = counts[rank];
    if (c == 1) continue;
    MultisetKey key(family == Family::multiset ? unrank_multiset(rank, t)
                                               : unrank_subset(rank, t));
    if (c == 0) {
      r.missing.push_back(std::move(key));
    } else {
      r.duplicated.emplace_back(std::move(key), c);
    }
  }
  std::sort(r.missing.begin(), r.missing.end());
  std::sort(r.duplicated.begin(), r.duplicated.end());
  r.invalid.assign(invalid.begin(), invalid.end());

  r.uniform_frequency = r.expected_length % static_cast<std::uint64_t>(n) == 0;
  if (r.uniform_frequency) {
    const std::uint64_t per = r.expected_length / static_cast<std::uint64_t>(n);
    for (int x = 1; x <= n; ++x) {
      if (r.frequency_table[static_cast<std::size_t>(x)] != per) r.uniform_frequency = false;
    }
  }

  r.ok = r.actual_length == r.expected_length && r.missing.empty() && r.duplicated.empty() &&
         r.invalid.empty();
  return r;
}

VerificationReport verify_multiset_ucycle(const CycleWord& word, int t) {
  return verify_ucycle(word, t, Family::multiset);
}

VerificationReport verify_subset_ucycle(const CycleWord& word, int t) {
  return verify_ucycle(word, t, Family::subset);
}

std::string format_report(const VerificationReport& r, std::size_t display_limit) {
  std::ostringstream os;
  os << "family: " << to_string(r.family) << '\n'
     << "n: " << r.n << '\n'
     << "t: " << r.t << '\n'
     << "ok: " << (r.ok ? "true" : "false") << '\n'
     << "expected_length: " << r.expected_length << '\n'
     << "actual_length: " << r.actual_length << '\n'
     << "missing_count: " << r.missing.size() << '\n'
     << "duplicated_count: " << r.duplicated.size() << '\n';
  if (r.family == Family::subset) os << "invalid_count: " << r.invalid.size() << '\n';

  auto list = [&](const char* name, std::size_t total, auto&& item) {
    if (total == 0) return;
    os << name << ":";
    for (std::size_t i = 0; i < std::min(total, display_limit); ++i) os << ' ' << item(i);
    if (total > display_limit) os << " ... (" << total - display_limit << " more)";
    os << '\n';
  };
  list("missing", r.missing.size(), [&](std::size_t i) { return r.missing[i].to_string(); });
  list("duplicated", r.duplicated.size(), [&](std::size_t i) {
    return r.duplicated[i].first.to_string() + "x" + std::to_string(r.duplicated[i].second);
  });
  list("invalid", r.invalid.size(), [&](std::size_t i) {
    return r.invalid[i].first.to_string() + "x" + std::to_string(r.invalid[i].second);
  });

  os << "frequency:";
  for (std::size_t x = 1; x < r.frequency_table.size(); ++x) {
    os << ' ' << x << '=' << r.frequency_table[x];
  }
  os << '\n' << "uniform_frequency: " << (r.uniform_frequency ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace ucycle
