#include <algorithm>
#include <set>

#include "doctest.h"
#include "ucycle/combinatorics.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/golden.hpp"
#include "ucycle/inductive.hpp"
#include "ucycle/verify.hpp"

using namespace ucycle;

namespace {

std::set<MultisetKey> as_set(const std::vector<MultisetKey>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("special letters") {
  SpecialLetters sp(10);
  CHECK(sp.a == 5);
  CHECK(sp.f == 10);
  CHECK(sp('d') == 8);
  CHECK_THROWS(sp('g'));
}

TEST_CASE("partition sizes and cover for n = 10..31") {
  for (int n = 10; n <= 31; n += 3) {
    CAPTURE(n);
    auto p = partition_abcd(n);
    CHECK(p.A.size() == binomial(n - 1, 3));
    CHECK(p.C.size() == 36);
    CHECK(p.D.size() == static_cast<std::size_t>(9 * (n - 6)));
    CHECK(p.A.size() + p.B.size() + p.C.size() + p.D.size() == multiset_count(n, 3));
    std::set<MultisetKey> all;
    for (auto* part : {&p.A, &p.B, &p.C, &p.D}) {
      for (const auto& k : *part) CHECK(all.insert(k).second);
    }
    CHECK(all.size() == multiset_count(n, 3));
  }
  auto p = partition_abcd(10);
  CHECK(p.A.size() == 84);
  CHECK(p.B.size() == 64);
  CHECK(as_set(p.B).contains({8, 9, 10}));
  CHECK(as_set(p.D).contains({1, 5, 8}));
  CHECK(as_set(p.C).contains({5, 5, 8}));
  CHECK(as_set(p.A).contains({1, 2, 3}));
  CHECK_THROWS_AS(partition_abcd(7), PreconditionError);
  CHECK_THROWS_AS(partition_abcd(11), PreconditionError);
}

TEST_CASE("base case") {
  auto b = base_case();
  CHECK(b.n == 7);
  CHECK(b.s_part.size() == 20);
  CHECK(b.t_part.size() == 64);
  CHECK(b.t_part[0] == 1);
  CHECK(b.t_part[1] == 1);
  CHECK(b.t_part[62] == 7);
  CHECK(b.t_part[63] == 6);
  CHECK(std::equal(b.s_part.vec().begin(), b.s_part.vec().begin() + 3, std::vector<Letter>{1, 1, 1}.begin()));
  CHECK(verify_multiset_ucycle(b.cycle(), 3).ok);
  // differs from the reference T by one adjacent swap
  auto given = parse_compact(7, golden::kTGiven);
  int diff = 0;
  for (std::size_t i = 0; i < 64; ++i) diff += given[i] != b.t_part[i];
  CHECK(diff == 2);
  CHECK(given[45] == b.t_part[46]);
  CHECK(given[46] == b.t_part[45]);
}

TEST_CASE("U and V at n = 10 match the reference words") {
  CHECK(build_u(10) == parse_compact(10, golden::kU10));
  CHECK(build_v(10) == parse_compact(10, golden::kV10));
  for (int n = 10; n <= 31; n += 3) {
    CHECK(build_u(n).size() == 29);
    CHECK(build_v(n).size() == static_cast<std::size_t>(9 * n - 47));
  }
  CHECK_THROWS_AS(build_v(9), PreconditionError);
}

TEST_CASE("V covers D exactly once") {
  for (int n : {10, 13, 16, 19}) {
    CAPTURE(n);
    const auto d = as_set(partition_abcd(n).D);
    std::map<MultisetKey, int> hits;
    for (const auto& k : linear_windows(build_v(n), 3)) {
      if (d.contains(k)) ++hits[k];
    }
    CHECK(hits.size() == d.size());
    CHECK(std::all_of(hits.begin(), hits.end(), [](auto& kv) { return kv.second == 1; }));
  }
  CHECK(partition_abcd(13).D.size() == 63);
}

TEST_CASE("U's windows at n = 10") {
  // C minus U: four from V's interior, {c,e,f} from V's tail, and the
  // T'-U ({a,e,f},{a,a,e}) and U-V ({b,b,f},{b,e,f}) seams
  SpecialLetters s(10);
  auto c = as_set(partition_abcd(10).C);
  for (const auto& k : std::vector<MultisetKey>{{s.a, s.b, s.e}, {s.a, s.d, s.e}, {s.a, s.c, s.d},
                                                {s.c, s.d, s.f}, {s.c, s.e, s.f}, {s.a, s.e, s.f},
                                                {s.a, s.a, s.e}, {s.b, s.b, s.f}, {s.b, s.e, s.f}}) {
    CHECK(c.erase(k) == 1);
  }
  CHECK(as_set(linear_windows(build_u(10), 3)) == c);
  CHECK(linear_windows(build_u(10), 3).size() == c.size());
}

TEST_CASE("first step reproduces the n = 10 assembly") {
  auto st = extend(base_case());
  CHECK(st.n == 10);
  CHECK(st.cycle().size() == 220);
  CHECK(verify_multiset_ucycle(st.cycle(), 3).ok);
  REQUIRE(st.provenance.size() == 1);
  CHECK(st.provenance[0].path == StepPath::pattern);

  auto tp = parse_compact(10, golden::kTPrimeGiven).vec();
  std::swap(tp[45], tp[46]);
  const CycleWord tpw(10, tp);
  const auto u = parse_compact(10, golden::kU10);
  const auto v = parse_compact(10, golden::kV10);
  auto expect = concat({tpw, u, v}, 10);
  CHECK(st.t_part == expect);

  // the only multisets needing the wrap are {1,n-1,n} and {1,1,n-1}
  auto lin = as_set(linear_windows(st.cycle(), 3));
  auto all = as_set(all_multisets(10, 3));
  std::vector<MultisetKey> wrap_only;
  std::set_difference(all.begin(), all.end(), lin.begin(), lin.end(), std::back_inserter(wrap_only));
  CHECK(wrap_only == std::vector<MultisetKey>{{1, 1, 9}, {1, 9, 10}});
}

TEST_CASE("pre-seam prefix misses exactly the two wrap multisets") {
  auto st = construct_inductive_traced(13);
  // the state before the last step
  auto prev = construct_inductive_traced(10);
  const int n = 13;
  auto tp = relabel(prev.t_part, {{n - 5, n - 2}, {n - 4, n - 1}, {n - 3, n}}, n);
  auto pre = concat({prev.s_part, prev.t_part, tp}, n);
  auto lin = as_set(linear_windows(pre, 3));
  auto p = partition_abcd(n);
  std::set<MultisetKey> ab(p.A.begin(), p.A.end());
  ab.insert(p.B.begin(), p.B.end());
  ab.erase({1, n - 1, n});
  ab.erase({1, 1, n - 1});
  CHECK(lin == ab);
  CHECK(linear_windows(pre, 3).size() == ab.size());
  CHECK(st.s_part == prev.cycle());
}

TEST_CASE("sweep, provenance and length recurrence") {
  auto st = construct_inductive_traced(31);
  REQUIRE(st.provenance.size() == 8);
  std::vector<std::size_t> len{0, 0, 0, 0, 20, 0, 0, 84};
  for (const auto& rec : st.provenance) {
    // n - 6 even: fixed pattern; odd: U replaced by search
    CHECK(rec.path == ((rec.n - 6) % 2 == 0 ? StepPath::pattern : StepPath::repaired));
  }
  for (int n = 10; n <= 31; n += 3) {
    auto w = construct_inductive(n);
    auto r = verify_multiset_ucycle(w, 3);
    CHECK(r.ok);
    CHECK(r.uniform_frequency);
    len.resize(static_cast<std::size_t>(n) + 1, 0);
    len[static_cast<std::size_t>(n)] = w.size();
    const auto m = static_cast<std::size_t>(n);
    CHECK(len[m] == len[m - 3] + (len[m - 3] - len[m - 6]) + 29 + (9 * m - 47));
    CHECK(len[m] == multiset_count(n, 3));
  }
  CHECK(format_provenance(construct_inductive_traced(16).provenance) ==
        "n=10 path=pattern\nn=13 path=repaired\nn=16 path=pattern\n");
}

TEST_CASE("repaired U has the same length") {
  auto st = construct_inductive_traced(13);
  auto prev = construct_inductive_traced(10);
  CHECK(st.t_part.size() == prev.t_part.size() + 29 + (9 * 13 - 47));
  CHECK(st.provenance.back().repair_nodes > 0);
}

TEST_CASE("small cases and rejections") {
  CHECK(construct_inductive(4) == parse_compact(4, golden::kS));
  CHECK(construct_inductive(7).size() == 84);
  CHECK(verify_multiset_ucycle(construct_inductive(7), 3).ok);
  CHECK(construct_inductive(16).size() == 816);
  for (int n : {1, 2, 3, 5, 6, 8, 9, 11, 12}) {
    CAPTURE(n);
    CHECK_THROWS_AS(construct_inductive(n), PreconditionError);
  }
  try {
    construct_inductive(11);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("1 (mod 3) only") != std::string::npos);
  }
}

TEST_CASE("extend rejects a broken state") {
  auto b = base_case();
  b.t_part = parse_compact(7, golden::kTGiven);
  CHECK_THROWS_AS(extend(b), PreconditionError);
  b = base_case();
  b.n = 8;
  CHECK_THROWS_AS(extend(b), PreconditionError);
}

TEST_CASE("starved repair reports the residual") {
  auto st = construct_inductive_traced(10);
  try {
    extend(st, 5);
    FAIL("expected budget exhaustion");
  } catch (const BudgetExhausted& e) {
    CHECK(std::string(e.what()).find("residual: {") != std::string::npos);
  }
}
