#include "window_search.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "ucycle/combinatorics.hpp"
#include "ucycle/errors.hpp"

namespace ucycle::detail {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << 24;

std::size_t table_size(int n, int t) {
  std::size_t size = 1;
  for (int i = 0; i < t; ++i) {
    size *= static_cast<std::size_t>(n);
    if (size > kMaxTableSize) {
      throw PreconditionError("alphabet too large for table-driven search (n^t > 2^24)");
    }
  }
  return size;
}

// Sorted 1-based copy of a 0-based tuple; empty if the subset family rejects it.
std::vector<Letter> sorted_member(const int* tuple, int t, Family family) {
  std::vector<Letter> s(tuple, tuple + t);
  std::sort(s.begin(), s.end());
  if (family == Family::subset && std::adjacent_find(s.begin(), s.end()) != s.end()) return {};
  for (auto& x : s) ++x;
  return s;
}

std::uint64_t rank_of(std::span<const Letter> sorted, Family family) {
  return family == Family::multiset ? rank_multiset(sorted) : rank_subset(sorted);
}

// Calls f(tuple) for every ordered t-tuple over 0..n-1, in index order.
template <typename F>
void for_each_tuple(int n, int t, F&& f) {
  std::vector<int> tuple(static_cast<std::size_t>(t), 0);
  while (true) {
    f(tuple.data());
    int i = t - 1;
    while (i >= 0 && ++tuple[static_cast<std::size_t>(i)] == n) tuple[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
}

class FullSearch {
 public:
  FullSearch(const FullSearchSpec& spec, NodeBudget& budget, const Visitor& visit)
      : spec_(spec),
        table_(spec.n, spec.t, spec.family),
        budget_(budget),
        visit_(visit),
        length_(spec.length),
        t_(spec.t),
        cyclic_(spec.before.empty() && spec.after.empty()) {
    if (!cyclic_ && (spec.before.size() != static_cast<std::size_t>(t_ - 1) ||
                     spec.after.size() != static_cast<std::size_t>(t_ - 1))) {
      throw std::invalid_argument("framed search needs t-1 letters on each side");
    }
    for (Letter x : spec.before) before_.push_back(x - 1);
    for (Letter x : spec.after) after_.push_back(x - 1);
    if (spec.alphabet.empty()) {
      cand_.resize(static_cast<std::size_t>(spec.n));
      std::iota(cand_.begin(), cand_.end(), 0);
    } else {
      for (Letter x : spec.alphabet) cand_.push_back(x - 1);
    }
    forced_.assign(length_, -1);
    for (std::size_t i = 0; i < spec.prefix.size() && i < length_; ++i) forced_[i] = spec.prefix[i] - 1;
    for (std::size_t i = 0; i < spec.suffix.size() && i < length_; ++i) {
      const std::size_t p = length_ - spec.suffix.size() + i;
      const int x = spec.suffix[i] - 1;
      if (forced_[p] >= 0 && forced_[p] != x) conflict_ = true;
      forced_[p] = x;
    }
    word_.assign(length_, 0);
    used_.assign(table_.universe(), 0);
    freq_.assign(static_cast<std::size_t>(spec.n), 0);
  }

  SearchEnd run() {
    std::size_t targets = 0;
    for (char c : spec_.target) targets += c != 0;
    const std::size_t windows = cyclic_ ? length_ : length_ + static_cast<std::size_t>(t_ - 1);
    if (conflict_ || length_ == 0 || targets != windows) return SearchEnd::explored;
    dfs(0);
    return end_;
  }

 private:
  int letter_at(long q) const {
    const long len = static_cast<long>(length_);
    if (q >= 0 && q < len) return word_[static_cast<std::size_t>(q)];
    if (cyclic_) return word_[static_cast<std::size_t>(((q % len) + len) % len)];
    if (q < 0) return before_[static_cast<std::size_t>(static_cast<long>(before_.size()) + q)];
    return after_[static_cast<std::size_t>(q - len)];
  }

  std::int32_t window_id(long s) const {
    int tuple[8];
    for (int j = 0; j < t_; ++j) tuple[j] = letter_at(s + j);
    const auto id = table_.id(tuple);
    if (id < 0 || !spec_.target[static_cast<std::size_t>(id)]) return -1;
    return id;
  }

  bool closes() {
    const long len = static_cast<long>(length_);
    long first = len - t_ + 1;
    if (cyclic_) first = std::max(first, 0L);
    std::vector<std::int32_t> marked;
    bool ok = true;
    for (long s = first; s < len; ++s) {
      const auto id = window_id(s);
      if (id < 0 || used_[static_cast<std::size_t>(id)]) {
        ok = false;
        break;
      }
      used_[static_cast<std::size_t>(id)] = 1;
      marked.push_back(id);
    }
    for (auto id : marked) used_[static_cast<std::size_t>(id)] = 0;
    return ok;
  }

  void dfs(std::size_t p) {
    if (!budget_.take()) {
      end_ = SearchEnd::budget;
      return;
    }
    if (p == length_) {
      if (closes()) {
        std::vector<Letter> out(word_.begin(), word_.end());
        for (auto& x : out) ++x;
        if (!visit_(out)) end_ = SearchEnd::stopped;
      }
      return;
    }
    const long s = static_cast<long>(p) - t_ + 1;
    const bool has_window = cyclic_ ? s >= 0 : true;
    const int only = forced_[p];
    for (int x : cand_) {
      if (only >= 0 && x != only) continue;
      if (spec_.freq_cap && freq_[static_cast<std::size_t>(x)] >= spec_.freq_cap) continue;
      word_[p] = x;
      std::int32_t id = -1;
      if (has_window) {
        id = window_id(s);
        if (id < 0 || used_[static_cast<std::size_t>(id)]) continue;
        used_[static_cast<std::size_t>(id)] = 1;
      }
      ++freq_[static_cast<std::size_t>(x)];
      dfs(p + 1);
      --freq_[static_cast<std::size_t>(x)];
      if (id >= 0) used_[static_cast<std::size_t>(id)] = 0;
      if (end_ != SearchEnd::explored) return;
    }
  }

  const FullSearchSpec& spec_;
  WindowTable table_;
  NodeBudget& budget_;
  const Visitor& visit_;
  std::size_t length_;
  int t_;
  bool cyclic_;
  bool conflict_ = false;
  std::vector<int> before_, after_, cand_, forced_, word_;
  std::vector<char> used_;
  std::vector<std::uint64_t> freq_;
  SearchEnd end_ = SearchEnd::explored;
};

// Orbits of the family under x -> x + 1 (mod n), keyed by ordered tuple.
struct OrbitTable {
  int n = 0;
  int t = 0;
  std::size_t orbits = 0;
  bool all_full = false;
  std::vector<std::int32_t> ids;

  std::int32_t id(const int* tuple) const noexcept {
    std::size_t idx = 0;
    for (int i = 0; i < t; ++i) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(tuple[i]);
    return ids[idx];
  }
};

OrbitTable build_orbits(int n, int t, Family family) {
  OrbitTable ot;
  ot.n = n;
  ot.t = t;
  ot.ids.assign(table_size(n, t), -1);
  std::unordered_map<std::uint64_t, std::int32_t> dense;
  std::vector<int> shifted(static_cast<std::size_t>(t));
  std::size_t idx = 0;
  for_each_tuple(n, t, [&](const int* tuple) {
    const std::size_t here = idx++;
    if (sorted_member(tuple, t, family).empty()) return;
    std::uint64_t best = ~std::uint64_t{0};
    for (int d = 0; d < n; ++d) {
      for (int j = 0; j < t; ++j) shifted[static_cast<std::size_t>(j)] = (tuple[j] + d) % n;
      best = std::min(best, rank_of(sorted_member(shifted.data(), t, family), family));
    }
    auto [it, fresh] = dense.try_emplace(best, static_cast<std::int32_t>(dense.size()));
    ot.ids[here] = it->second;
  });
  ot.orbits = dense.size();
  ot.all_full = ot.orbits * static_cast<std::size_t>(n) == family_size(n, t, family);
  return ot;
}

class ShiftAttempt {
 public:
  ShiftAttempt(const OrbitTable& ot, std::size_t period, int shift, std::vector<int> forced,
               std::uint64_t local_limit, NodeBudget& global)
      : ot_(ot),
        m_(period),
        s_(shift),
        forced_(std::move(forced)),
        local_limit_(local_limit),
        global_(global) {
    v_.assign(m_, 0);
    used_.assign(ot_.orbits, 0);
  }

  enum class Result { found, exhausted, cut };

  Result run() {
    if (dfs(0)) return Result::found;
    return cut_ ? Result::cut : Result::exhausted;
  }

  const std::vector<int>& period() const { return v_; }

 private:
  int letter(std::size_t pos) const {
    const std::size_t j = pos / m_;
    return static_cast<int>((static_cast<std::size_t>(v_[pos % m_]) +
                             j * static_cast<std::size_t>(s_)) %
                            static_cast<std::size_t>(ot_.n));
  }

  std::int32_t window(std::size_t start) const {
    int tuple[8];
    for (int j = 0; j < ot_.t; ++j) tuple[j] = letter(start + static_cast<std::size_t>(j));
    return ot_.id(tuple);
  }

  bool dfs(std::size_t p) {
    if (++local_ > local_limit_ || !global_.take()) {
      cut_ = true;
      return false;
    }
    const std::size_t t = static_cast<std::size_t>(ot_.t);
    if (p == m_) {
      std::vector<std::int32_t> marked;
      bool ok = true;
      for (std::size_t s = m_ + 1 >= t ? m_ + 1 - t : 0; s < m_; ++s) {
        const auto id = window(s);
        if (id < 0 || used_[static_cast<std::size_t>(id)]) {
          ok = false;
          break;
        }
        used_[static_cast<std::size_t>(id)] = 1;
        marked.push_back(id);
      }
      for (auto id : marked) used_[static_cast<std::size_t>(id)] = 0;
      return ok;
    }
    const int only = forced_[p];
    for (int x = 0; x < ot_.n; ++x) {
      if (only >= 0 && x != only) continue;
      v_[p] = x;
      std::int32_t id = -1;
      if (p + 1 >= t) {
        id = window(p + 1 - t);
        if (id < 0 || used_[static_cast<std::size_t>(id)]) continue;
        used_[static_cast<std::size_t>(id)] = 1;
      }
      if (dfs(p + 1)) return true;
      if (id >= 0) used_[static_cast<std::size_t>(id)] = 0;
      if (cut_) return false;
    }
    return false;
  }

  const OrbitTable& ot_;
  std::size_t m_;
  int s_;
  std::vector<int> forced_;
  std::uint64_t local_limit_;
  std::uint64_t local_ = 0;
  NodeBudget& global_;
  std::vector<int> v_;
  std::vector<char> used_;
  bool cut_ = false;
};

}  // namespace

WindowTable::WindowTable(int n, int t, Family family)
    : n_(n), t_(t), universe_(family_size(n, t, family)) {
  if (t < 1 || t > 8) throw PreconditionError("window size must be in 1..8");
  ids_.assign(table_size(n, t), -1);
  std::size_t idx = 0;
  for_each_tuple(n, t, [&](const int* tuple) {
    const auto s = sorted_member(tuple, t, family);
    if (!s.empty()) ids_[idx] = static_cast<std::int32_t>(rank_of(s, family));
    ++idx;
  });
}

SearchEnd run_full_search(const FullSearchSpec& spec, NodeBudget& budget, const Visitor& visit) {
  FullSearch search(spec, budget, visit);
  return search.run();
}

std::optional<ShiftWitness> run_shift_search(const ShiftSearchSpec& spec, NodeBudget& budget) {
  const int n = spec.n;
  if (n < 2) return std::nullopt;
  const OrbitTable ot = build_orbits(n, spec.t, spec.family);
  if (!ot.all_full) return std::nullopt;
  const std::size_t m = ot.orbits;
  if (m == 0 || spec.prefix.size() + spec.suffix.size() > m) return std::nullopt;

  std::vector<int> base;
  if (spec.prefix.empty()) {
    base.push_back(0);
  } else {
    for (Letter x : spec.prefix) base.push_back(x - 1);
  }
  if (base.size() + spec.suffix.size() > m) return std::nullopt;

  std::vector<int> shifts;
  for (int s = 1; s < n; ++s) {
    if (std::gcd(s, n) == 1) shifts.push_back(s);
  }

  for (std::uint64_t local = 1024;; local *= 2) {
    bool any_cut = false;
    for (int s : shifts) {
      // The last period is the first one translated by (n-1)s.
      std::vector<int> forced(m, -1);
      for (std::size_t i = 0; i < base.size(); ++i) forced[i] = base[i];
      const long back = static_cast<long>(n - 1) * s;
      for (std::size_t i = 0; i < spec.suffix.size(); ++i) {
        const long x = ((spec.suffix[i] - 1 - back) % n + n) % n;
        forced[m - spec.suffix.size() + i] = static_cast<int>(x);
      }
      std::vector<int> branch;
      const std::size_t free_pos = base.size();
      if (free_pos < m && forced[free_pos] < 0) {
        for (int x = 0; x < n; ++x) branch.push_back(x);
      } else {
        branch.push_back(-1);
      }
      for (int x : branch) {
        auto f = forced;
        if (x >= 0) f[free_pos] = x;
        ShiftAttempt attempt(ot, m, s, std::move(f), local, budget);
        const auto r = attempt.run();
        if (r == ShiftAttempt::Result::found) {
          ShiftWitness w;
          w.shift = s;
          w.period = m;
          w.word.resize(m * static_cast<std::size_t>(n));
          for (std::size_t p = 0; p < w.word.size(); ++p) {
            const auto& v = attempt.period();
            w.word[p] = static_cast<Letter>((static_cast<std::size_t>(v[p % m]) +
                                             (p / m) * static_cast<std::size_t>(s)) %
                                                static_cast<std::size_t>(n) +
                                            1);
          }
          return w;
        }
        if (r == ShiftAttempt::Result::cut) any_cut = true;
        if (budget.spent()) return std::nullopt;
      }
    }
    if (!any_cut) return std::nullopt;
  }
}

}  // namespace ucycle::detail
