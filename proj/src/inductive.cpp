#include "ucycle/inductive.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ucycle/combinatorics.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/golden.hpp"
#include "ucycle/search.hpp"
#include "ucycle/verify.hpp"

namespace ucycle {

namespace {

void require_step_n(int n, const char* what) {
  if (n < 10 || n % 3 != 1) {
    throw PreconditionError(std::string(what) + " needs n >= 10 with n = 1 (mod 3), got n=" +
                            std::to_string(n));
  }
}

std::string list_keys(const std::vector<MultisetKey>& keys) {
  std::string out;
  for (const auto& k : keys) out += (out.empty() ? "" : " ") + k.to_string();
  return out;
}

}  // namespace

Letter SpecialLetters::operator()(char name) const {
  switch (name) {
    case 'a': return a;
    case 'b': return b;
    case 'c': return c;
    case 'd': return d;
    case 'e': return e;
    case 'f': return f;
  }
  throw std::invalid_argument(std::string("no special letter '") + name + "'");
}

PartitionABCD partition_abcd(int n) {
  require_step_n(n, "partition");
  PartitionABCD p;
  p.n = n;
  for (auto& key : all_multisets(n, 3)) {
    int low = 0, mid = 0, high = 0;
    for (Letter x : key.elements()) {
      if (x <= n - 6) ++low;
      else if (x <= n - 3) ++mid;
      else ++high;
    }
    if (high == 0) p.A.push_back(std::move(key));
    else if (mid == 0) p.B.push_back(std::move(key));
    else if (low == 0) p.C.push_back(std::move(key));
    else p.D.push_back(std::move(key));
  }
  return p;
}

const char* to_string(StepPath p) noexcept {
  return p == StepPath::pattern ? "pattern" : "repaired";
}

CycleWord InductionState::cycle() const { return concat(s_part, t_part, n); }

InductionState base_case() {
  return {7, parse_compact(4, golden::kS), parse_compact(7, golden::kT), {}};
}

CycleWord build_u(int n) {
  require_step_n(n, "U");
  const SpecialLetters sp(n);
  std::vector<Letter> w;
  for (char ch : golden::kUPattern) w.push_back(sp(ch));
  return CycleWord(n, std::move(w));
}

CycleWord build_v(int n) {
  require_step_n(n, "V");
  const SpecialLetters sp(n);
  const char* blocks[3][2] = {{"be", "af"}, {"ad", "ce"}, {"cf", "bd"}};
  std::vector<Letter> w;
  for (auto& pq : blocks) {
    for (int k = n - 6; k >= 1; --k) {
      const char* pair = k % 2 == 1 ? pq[1] : pq[0];
      w.push_back(sp(pair[0]));
      w.push_back(sp(pair[1]));
      w.push_back(k);
    }
    w.push_back(sp(pq[0][0]));
    w.push_back(sp(pq[0][1]));
  }
  w.push_back(sp.e);
  return CycleWord(n, std::move(w));
}

InductionState extend(const InductionState& state, std::uint64_t repair_budget) {
  const int m = state.n;
  if (m < 7 || m % 3 != 1) {
    throw PreconditionError("extend needs a state over [m], m >= 7, m = 1 (mod 3)");
  }
  const int n = m + 3;
  const CycleWord s = state.cycle();
  if (!verify_multiset_ucycle(s, 3).ok) {
    throw PreconditionError("extend: s_part + t_part is not a ucycle over [" + std::to_string(m) +
                            "]");
  }

  const std::map<Letter, Letter> lift{{n - 5, n - 2}, {n - 4, n - 1}, {n - 3, n}};
  const CycleWord tp = relabel(state.t_part, lift, n);
  const CycleWord v = build_v(n);
  CycleWord u = build_u(n);

  StepRecord rec{n, StepPath::pattern, 0};
  CycleWord whole = concat({s, tp, u, v}, n);
  if (!verify_multiset_ucycle(whole, 3).ok) {
    // Everything outside U's slot is fixed; U must supply the rest.
    const CycleWord head = concat(s, tp, n);
    const std::size_t slot = head.size();
    const std::size_t len = whole.size();
    std::vector<std::size_t> seen(multiset_count(n, 3), 0);
    for (std::size_t i = 0; i < len; ++i) {
      bool touches = false;
      std::vector<Letter> win;
      for (std::size_t j = 0; j < 3; ++j) {
        const std::size_t p = (i + j) % len;
        if (p >= slot && p < slot + u.size()) touches = true;
        win.push_back(whole[p]);
      }
      if (touches) continue;
      std::sort(win.begin(), win.end());
      ++seen[rank_multiset(win)];
    }
    std::vector<MultisetKey> residual;
    for (std::uint64_t r = 0; r < seen.size(); ++r) {
      if (seen[r] > 1) {
        throw InfeasibleError("step to n=" + std::to_string(n) + ": " +
                              MultisetKey(unrank_multiset(r, 3)).to_string() +
                              " occurs twice outside U's slot; replacing U cannot help");
      }
      if (seen[r] == 0) residual.emplace_back(unrank_multiset(r, 3));
    }
    const std::vector<Letter> before{head[slot - 2], head[slot - 1]};
    const std::vector<Letter> after{v[0], v[1]};
    try {
      auto found = fill_gap(n, 3, before, after, residual, repair_budget);
      u = std::move(found.word);
      rec.repair_nodes = found.nodes;
    } catch (const BudgetExhausted& e) {
      throw BudgetExhausted("step to n=" + std::to_string(n) + ": " + e.what() +
                                "; residual: " + list_keys(residual),
                            e.nodes());
    } catch (const InfeasibleError& e) {
      throw InfeasibleError("step to n=" + std::to_string(n) + ": " + e.what() +
                            "; residual: " + list_keys(residual));
    }
    rec.path = StepPath::repaired;
    whole = concat({s, tp, u, v}, n);
    if (!verify_multiset_ucycle(whole, 3).ok) {
      throw std::logic_error("repaired assembly at n=" + std::to_string(n) + " does not verify");
    }
  }

  InductionState next{n, s, concat({tp, u, v}, n), state.provenance};
  const auto& t = next.t_part;
  if (t[0] != 1 || t[1] != 1 || t[t.size() - 1] != n - 1 || t[t.size() - 2] != n) {
    throw std::logic_error("extension at n=" + std::to_string(n) +
                           " lost its lead-in 1,1 or lead-out n,n-1");
  }
  next.provenance.push_back(rec);
  return next;
}

InductionState construct_inductive_traced(int n, std::uint64_t repair_budget) {
  if (n < 7 || n % 3 != 1) {
    throw PreconditionError(
        "inductive path covers n ≡ 1 (mod 3) only; use search or doubling");
  }
  InductionState st = base_case();
  while (st.n < n) st = extend(st, repair_budget);
  return st;
}

CycleWord construct_inductive(int n, std::uint64_t repair_budget) {
  if (n == 4) return parse_compact(4, golden::kS);
  return construct_inductive_traced(n, repair_budget).cycle();
}

std::string format_provenance(const std::vector<StepRecord>& steps) {
  std::ostringstream os;
  for (const auto& s : steps) os << "n=" << s.n << " path=" << to_string(s.path) << '\n';
  return os.str();
}

}  // namespace ucycle
