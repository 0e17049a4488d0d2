#include "ucycle/search.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

#include "ucycle/combinatorics.hpp"
#include "ucycle/errors.hpp"
#include "window_search.hpp"

namespace ucycle {

namespace {

void check_window_size(int n, int t) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (t < 2 || t > 4) throw PreconditionError("search supports window sizes 2..4");
}

void check_letters(std::span<const Letter> letters, int n, const char* what) {
  for (Letter x : letters) {
    if (x < 1 || x > n) {
      throw PreconditionError(std::string(what) + " letter " + std::to_string(x) +
                              " outside 1.." + std::to_string(n));
    }
  }
}

std::vector<char> target_mask(int n, int t, Family family,
                              const std::optional<std::vector<MultisetKey>>& keys) {
  const auto universe = family_size(n, t, family);
  if (!keys) return std::vector<char>(universe, 1);
  std::vector<char> mask(universe, 0);
  for (const auto& k : *keys) {
    if (k.size() != static_cast<std::size_t>(t)) throw PreconditionError("target key of wrong size");
    check_letters(k.elements(), n, "target");
    if (family == Family::subset && k.has_repeat()) {
      throw PreconditionError("target key " + k.to_string() + " is not a subset");
    }
    const auto r = family == Family::multiset ? rank_multiset(k.elements())
                                              : rank_subset(k.elements());
    if (mask[r]) throw PreconditionError("target key " + k.to_string() + " listed twice");
    mask[r] = 1;
  }
  return mask;
}

}  // namespace

SearchOutcome find_ucycle(int n, int t, Family family, const SearchConstraints& c) {
  check_window_size(n, t);
  if (c.node_budget < 1) throw PreconditionError("node budget must be at least 1");
  if (!c.coverage_target && !admissible(n, t, family)) {
    throw InadmissibleError(std::string("no ") + to_string(family) + " ucycle: n=" +
                            std::to_string(n) + " does not divide the family size for t=" +
                            std::to_string(t));
  }
  check_letters(c.required_prefix, n, "prefix");
  check_letters(c.required_suffix, n, "suffix");

  const auto mask = target_mask(n, t, family, c.coverage_target);
  const std::size_t length =
      c.coverage_target ? c.coverage_target->size() : family_size(n, t, family);
  if (c.required_prefix.size() > length || c.required_suffix.size() > length) {
    throw PreconditionError("prefix/suffix longer than the cycle");
  }

  std::uint64_t spent = 0;
  if (!c.coverage_target) {
    detail::NodeBudget shift_budget(std::max<std::uint64_t>(1, c.node_budget / 2));
    const auto w = detail::run_shift_search(
        {n, t, family, c.required_prefix, c.required_suffix}, shift_budget);
    spent = shift_budget.used();
    if (w) {
      CycleWord word(n, w->word);
      if (!verify_ucycle(word, t, family).ok) {
        throw std::logic_error("shift search produced an unverified word");
      }
      return {std::move(word), spent,
              "shift s=" + std::to_string(w->shift) + " period=" + std::to_string(w->period)};
    }
  }

  detail::FullSearchSpec spec;
  spec.n = n;
  spec.t = t;
  spec.family = family;
  spec.length = length;
  spec.prefix = c.required_prefix;
  spec.suffix = c.required_suffix;
  spec.target = mask;
  if (!c.coverage_target && length % static_cast<std::size_t>(n) == 0) {
    spec.freq_cap = length / static_cast<std::size_t>(n);
  }
  detail::NodeBudget budget(c.node_budget > spent ? c.node_budget - spent : 1);
  std::optional<std::vector<Letter>> found;
  const auto end = detail::run_full_search(spec, budget, [&](std::span<const Letter> w) {
    found.emplace(w.begin(), w.end());
    return false;
  });
  spent += budget.used();
  if (found) {
    CycleWord word(n, std::move(*found));
    if (c.coverage_target) {
      // coverage of the supplied keys is the engine's own invariant
      return {std::move(word), spent, "full-dfs"};
    }
    if (!verify_ucycle(word, t, family).ok) {
      throw std::logic_error("full search produced an unverified word");
    }
    return {std::move(word), spent, "full-dfs"};
  }
  if (end == detail::SearchEnd::budget) {
    throw BudgetExhausted("search budget of " + std::to_string(c.node_budget) +
                              " nodes exhausted before a witness was found",
                          spent);
  }
  throw InfeasibleError("no ucycle satisfies the constraints (search space exhausted)");
}

CycleWord generate_subset_ucycle(int n, int t, const SearchConstraints& constraints) {
  return find_ucycle(n, t, Family::subset, constraints).word;
}

CycleWord find_multiset_ucycle(int n, int t, const SearchConstraints& constraints) {
  return find_ucycle(n, t, Family::multiset, constraints).word;
}

SearchOutcome fill_gap(int n, int t, std::span<const Letter> before, std::span<const Letter> after,
                       const std::vector<MultisetKey>& target, std::uint64_t node_budget) {
  check_window_size(n, t);
  if (before.size() != static_cast<std::size_t>(t - 1) ||
      after.size() != static_cast<std::size_t>(t - 1)) {
    throw PreconditionError("fill_gap needs t-1 context letters on each side");
  }
  check_letters(before, n, "context");
  check_letters(after, n, "context");
  if (target.size() <= static_cast<std::size_t>(t - 1)) {
    throw PreconditionError("target too small to leave room for a gap word");
  }

  detail::FullSearchSpec spec;
  spec.n = n;
  spec.t = t;
  spec.family = Family::multiset;
  spec.length = target.size() - static_cast<std::size_t>(t - 1);
  spec.before.assign(before.begin(), before.end());
  spec.after.assign(after.begin(), after.end());
  spec.target = target_mask(n, t, Family::multiset, target);
  std::set<Letter> letters;
  for (const auto& k : target) letters.insert(k.elements().begin(), k.elements().end());
  spec.alphabet.assign(letters.begin(), letters.end());

  detail::NodeBudget budget(node_budget);
  std::optional<std::vector<Letter>> found;
  const auto end = detail::run_full_search(spec, budget, [&](std::span<const Letter> w) {
    found.emplace(w.begin(), w.end());
    return false;
  });
  if (found) return {CycleWord(n, std::move(*found)), budget.used(), "full-dfs"};
  if (end == detail::SearchEnd::budget) {
    throw BudgetExhausted("gap search budget exhausted", budget.used());
  }
  throw InfeasibleError("no gap word covers the target exactly once");
}

namespace {

struct ClassSets {
  std::set<std::vector<Letter>> plain;
  std::set<std::vector<Letter>> reflect;

  void add(std::span<const Letter> w, int n) {
    CycleWord word(n, std::vector<Letter>(w.begin(), w.end()));
    plain.insert(canonicalize(word).representative.vec());
    reflect.insert(canonicalize_with_reflection(word).representative.vec());
  }
  void merge(ClassSets&& o) {
    plain.merge(o.plain);
    reflect.merge(o.reflect);
  }
};

detail::FullSearchSpec counting_spec(int n, int t, bool anchored) {
  detail::FullSearchSpec spec;
  spec.n = n;
  spec.t = t;
  spec.family = Family::multiset;
  spec.length = multiset_count(n, t);
  spec.target.assign(spec.length, 1);
  spec.freq_cap = spec.length / static_cast<std::size_t>(n);
  if (anchored) spec.prefix.assign(std::min<std::size_t>(static_cast<std::size_t>(t), spec.length), 1);
  return spec;
}

}  // namespace

CountResult count_distinct(int n, int t, const CountOptions& options) {
  check_window_size(n, t);
  CountResult result;
  result.n = n;
  result.t = t;
  if (!admissible_multiset(n, t)) {
    result.exhausted = true;
    return result;
  }

  const auto base = counting_spec(n, t, options.anchored);
  // One branch per letter at the first free position.
  std::vector<detail::FullSearchSpec> branches;
  if (base.prefix.size() < base.length) {
    for (Letter x = 1; x <= n; ++x) {
      auto b = base;
      b.prefix.push_back(x);
      branches.push_back(std::move(b));
    }
  } else {
    branches.push_back(base);
  }

  detail::NodeBudget budget(options.node_budget);
  std::vector<ClassSets> found(branches.size());
  std::vector<detail::SearchEnd> ends(branches.size(), detail::SearchEnd::explored);
  auto run_branch = [&](std::size_t i) {
    ends[i] = detail::run_full_search(branches[i], budget, [&](std::span<const Letter> w) {
      found[i].add(w, n);
      return true;
    });
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(branches.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < branches.size(); ++i) run_branch(i);
  } else {
    std::mutex mu;
    std::size_t next = 0;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          std::size_t i;
          {
            std::lock_guard lock(mu);
            if (next == branches.size()) return;
            i = next++;
          }
          run_branch(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  ClassSets all;
  for (auto& f : found) all.merge(std::move(f));
  result.count_rot_relabel = all.plain.size();
  result.count_also_reflect = all.reflect.size();
  result.exhausted = std::none_of(ends.begin(), ends.end(),
                                  [](auto e) { return e == detail::SearchEnd::budget; });
  result.nodes_visited = budget.used();
  return result;
}

CountResult count_distinct(int n, int t, std::uint64_t node_budget) {
  CountOptions o;
  o.node_budget = node_budget;
  return count_distinct(n, t, o);
}

std::string format_count(const CountResult& r) {
  return std::to_string(r.n) + " " + std::to_string(r.t) + " " +
         std::to_string(r.count_rot_relabel) + " " + std::to_string(r.count_also_reflect) + " " +
         (r.exhausted ? "true" : "false") + " " + std::to_string(r.nodes_visited);
}

std::size_t enumerate_ucycles(int n, int t, std::size_t limit,
                              const std::function<void(const CanonicalClass&)>& sink,
                              std::uint64_t node_budget) {
  check_window_size(n, t);
  if (limit == 0 || !admissible_multiset(n, t)) return 0;
  const auto spec = counting_spec(n, t, true);
  detail::NodeBudget budget(node_budget);
  std::set<std::vector<Letter>> seen;
  std::size_t emitted = 0;
  detail::run_full_search(spec, budget, [&](std::span<const Letter> w) {
    auto cls = canonicalize(CycleWord(n, std::vector<Letter>(w.begin(), w.end())));
    if (seen.insert(cls.representative.vec()).second) {
      sink(cls);
      ++emitted;
    }
    return emitted < limit;
  });
  return emitted;
}

std::vector<CanonicalClass> enumerate_ucycles(int n, int t, std::size_t limit,
                                              std::uint64_t node_budget) {
  std::vector<CanonicalClass> out;
  enumerate_ucycles(
      n, t, limit, [&](const CanonicalClass& c) { out.push_back(c); }, node_budget);
  return out;
}

}  // namespace ucycle
