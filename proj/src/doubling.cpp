#include "ucycle/doubling.hpp"

#include <algorithm>

#include "ucycle/errors.hpp"
#include "ucycle/search.hpp"
#include "ucycle/verify.hpp"

namespace ucycle {

CycleWord double_letters_2(const CycleWord& subset_cycle) {
  if (!verify_subset_ucycle(subset_cycle, 2).ok) {
    throw InfeasibleError("input is not a valid 2-subset ucycle");
  }
  const int n = subset_cycle.alphabet_size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Letter> out;
  for (Letter x : subset_cycle.letters()) {
    out.push_back(x);
    if (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      out.push_back(x);
    }
  }
  return CycleWord(n, std::move(out));
}

PairOccurrenceIndex pair_index(const CycleWord& X) {
  if (!verify_subset_ucycle(X, 3).ok) throw InfeasibleError("input is not a valid 3-subset ucycle");
  PairOccurrenceIndex idx;
  idx.n = X.alphabet_size();
  const std::size_t len = X.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Letter a = X[i], b = X.cyclic_at(i + 1);
    idx.present.insert(a, b);
    if (i + 1 < len) idx.first_occurrence.try_emplace(PairSet::normalize(a, b), i);
  }
  for (Letter a = 1; a <= idx.n; ++a) {
    for (Letter b = a + 1; b <= idx.n; ++b) {
      if (!idx.present.contains(a, b)) idx.missing.insert(a, b);
    }
  }
  // A missing pair {a,b} means windows {a,b,c} all have c in the middle, so
  // a shares no other missing pair; anything else contradicts verification.
  if (!idx.missing.is_matching()) throw InfeasibleError("input is not a valid 3-subset ucycle");
  return idx;
}

PairSet AnchorPermutation::chain() const {
  PairSet s;
  for (std::size_t i = 0; i < x.size(); ++i) s.insert(x[i], x[(i + 1) % x.size()]);
  return s;
}

namespace {

class PermutationSearch {
 public:
  PermutationSearch(int n, Letter first, Letter last, const PairSet& missing)
      : n_(n), first_(first), last_(last), partner_(static_cast<std::size_t>(n) + 1, 0),
        used_(static_cast<std::size_t>(n) + 1, 0) {
    for (const auto& [a, b] : missing) {
      partner_[static_cast<std::size_t>(a)] = b;
      partner_[static_cast<std::size_t>(b)] = a;
    }
  }

  std::optional<std::vector<Letter>> run() {
    if (!place(first_)) return std::nullopt;
    if (dfs()) return x_;
    return std::nullopt;
  }

 private:
  bool place(Letter v) {
    const std::size_t slot = x_.size();  // 0-based
    if (used_[static_cast<std::size_t>(v)]) return false;
    const bool final_slot = slot + 1 == static_cast<std::size_t>(n_);
    if ((v == last_) != final_slot) return false;
    if (slot % 2 == 1) {
      // closes the pair {x[slot-1], v}: matched letters must meet their partner
      const Letter u = x_.back();
      const Letter pu = partner_[static_cast<std::size_t>(u)];
      const Letter pv = partner_[static_cast<std::size_t>(v)];
      if (pu != 0 && pu != v) return false;
      if (pv != 0 && pv != u) return false;
    } else {
      // opening a pair whose partner must be last is only possible right before it
      const Letter pv = partner_[static_cast<std::size_t>(v)];
      if (pv == last_ && slot + 2 != static_cast<std::size_t>(n_)) return false;
    }
    used_[static_cast<std::size_t>(v)] = 1;
    x_.push_back(v);
    return true;
  }

  void unplace() {
    used_[static_cast<std::size_t>(x_.back())] = 0;
    x_.pop_back();
  }

  bool dfs() {
    if (x_.size() == static_cast<std::size_t>(n_)) return true;
    for (Letter v = 1; v <= n_; ++v) {
      if (!place(v)) continue;
      if (dfs()) return true;
      unplace();
    }
    return false;
  }

  int n_;
  Letter first_, last_;
  std::vector<Letter> partner_;
  std::vector<char> used_;
  std::vector<Letter> x_;
};

}  // namespace

AnchorPermutation choose_permutation(const CycleWord& X, const PairOccurrenceIndex& idx) {
  const int n = X.alphabet_size();
  if (n % 2 != 0) throw PreconditionError("anchor permutation needs even n");
  if (idx.n != n) throw PreconditionError("pair index built for a different alphabet");
  auto x = PermutationSearch(n, X.front(), X.back(), idx.missing).run();
  if (!x) {
    throw InfeasibleError("no anchor permutation starts with " + std::to_string(X.front()) +
                          ", ends with " + std::to_string(X.back()) +
                          " and pairs up missing " + idx.missing.to_string());
  }
  return {std::move(*x)};
}

CycleWord double_pair_at(const CycleWord& w, std::size_t i) {
  if (i + 1 >= w.size()) throw std::out_of_range("double_pair_at: no pair at position");
  std::vector<Letter> out(w.vec());
  const Letter a = w[i], b = w[i + 1];
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i + 2), {a, b});
  return CycleWord(w.alphabet_size(), std::move(out));
}

std::vector<std::size_t> doubling_positions(const PairOccurrenceIndex& idx,
                                            const AnchorPermutation& perm) {
  const PairSet chain = perm.chain();
  std::vector<std::size_t> pos;
  for (const auto& [a, b] : idx.present) {
    if (chain.contains(a, b)) continue;
    const auto it = idx.first_occurrence.find({a, b});
    // only the wrap pair lacks a linear occurrence, and it is {xn, x1}
    if (it == idx.first_occurrence.end()) {
      throw std::logic_error("pair present only across the wrap is not in the chain");
    }
    pos.push_back(it->second);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

CycleWord double_pairs(const CycleWord& X, const AnchorPermutation& perm,
                       const PairOccurrenceIndex& idx) {
  const auto pos = doubling_positions(idx, perm);
  std::vector<Letter> out(X.vec());
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    const std::size_t i = *it;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i + 2), {X[i], X[i + 1]});
  }
  return CycleWord(X.alphabet_size(), std::move(out));
}

CycleWord append_triples(const CycleWord& Xp, const AnchorPermutation& perm) {
  std::vector<Letter> out(Xp.vec());
  for (Letter v : perm.x) out.insert(out.end(), 3, v);
  CycleWord w(Xp.alphabet_size(), std::move(out));
  const auto report = verify_multiset_ucycle(w, 3);
  if (!report.ok) {
    throw InfeasibleError("tripled suffix does not complete a 3-multiset ucycle (" +
                          std::to_string(report.missing.size()) + " missing, " +
                          std::to_string(report.duplicated.size()) + " duplicated)");
  }
  return w;
}

DoublingTrace construct_doubling_traced(int n, const std::optional<CycleWord>& subset_input,
                                        std::uint64_t search_budget) {
  if (n % 3 == 0) {
    throw InadmissibleError("no doubling construction for n=" + std::to_string(n) +
                            ": 3 divides n, so n does not divide C(n+2,3)");
  }
  if (n % 2 != 0) {
    throw PreconditionError("doubling covers even n only; odd n needs the search fallback");
  }
  if (n < 8) throw PreconditionError("doubling needs n >= 8");

  SearchConstraints sc;
  sc.node_budget = search_budget;
  CycleWord x = subset_input ? *subset_input : generate_subset_ucycle(n, 3, sc);
  if (x.alphabet_size() != n) {
    throw PreconditionError("subset cycle is over [" + std::to_string(x.alphabet_size()) +
                            "], expected [" + std::to_string(n) + "]");
  }
  PairOccurrenceIndex idx = pair_index(x);
  std::optional<AnchorPermutation> perm;
  if (subset_input) {
    perm = choose_permutation(x, idx);
  } else {
    for (std::size_t r = 0; r < x.size() && !perm; ++r) {
      const CycleWord rx = rotate(x, r);
      try {
        auto ridx = pair_index(rx);
        perm = choose_permutation(rx, ridx);
        x = rx;
        idx = std::move(ridx);
      } catch (const InfeasibleError&) {
      }
    }
    if (!perm) throw InfeasibleError("no rotation of the subset cycle admits an anchor permutation");
  }
  CycleWord xp = double_pairs(x, *perm, idx);
  CycleWord xpp = append_triples(xp, *perm);
  return {std::move(x), std::move(idx), std::move(*perm), std::move(xp), std::move(xpp)};
}

CycleWord construct_doubling(int n, const std::optional<CycleWord>& subset_input,
                             std::uint64_t search_budget) {
  return construct_doubling_traced(n, subset_input, search_budget).x_double_prime;
}

}  // namespace ucycle
