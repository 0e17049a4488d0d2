#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ucycle/combinatorics.hpp"
#include "ucycle/core.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/ucy_io.hpp"

using namespace ucycle;

TEST_CASE("cycle word rejects bad letters") {
  CHECK_THROWS_AS(CycleWord(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(CycleWord(3, {1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(CycleWord(3, {0, 1}), std::invalid_argument);
  CycleWord w(3, {1, 2, 3});
  CHECK(w.size() == 3);
  CHECK(w.cyclic_at(4) == 2);
}

TEST_CASE("windows") {
  CycleWord w(4, {1, 1, 2, 4});
  auto cyc = cyclic_windows(w, 3);
  REQUIRE(cyc.size() == 4);
  CHECK(cyc[0] == MultisetKey{1, 1, 2});
  CHECK(cyc[2] == MultisetKey{1, 2, 4});  // 2 4 1
  CHECK(cyc[3] == MultisetKey{1, 1, 4});  // 4 1 1
  CHECK(linear_windows(w, 3).size() == 2);
  CHECK_THROWS_AS(cyclic_windows(CycleWord(2, {1, 2}), 3), std::invalid_argument);
}

TEST_CASE("multiset key") {
  MultisetKey k{3, 1, 3};
  CHECK(k.to_string() == "{1,3,3}");
  CHECK(k.has_repeat());
  CHECK(k.count(3) == 2);
  CHECK_FALSE(k.contains(2));
  CHECK_FALSE(MultisetKey{1, 2, 3}.has_repeat());
}

TEST_CASE("pair set") {
  PairSet p;
  CHECK(p.insert(5, 1));
  CHECK_FALSE(p.insert(1, 5));
  p.insert(2, 6);
  CHECK(p.to_string() == "{1,5} {2,6}");
  CHECK(p.is_matching());
  p.insert(6, 3);
  CHECK_FALSE(p.is_matching());
  CHECK(p.erase(3, 6));
  CHECK(p.size() == 2);
}

TEST_CASE("relabel, rotate, reverse, concat") {
  CycleWord w(5, {1, 2, 3, 4, 5});
  CHECK(relabel(w, {{1, 7}, {2, 8}}, 8).vec() == std::vector<Letter>{7, 8, 3, 4, 5});
  CHECK_THROWS_AS(relabel(w, {{1, 9}}, 8), std::invalid_argument);
  CHECK(rotate(w, 2).vec() == std::vector<Letter>{3, 4, 5, 1, 2});
  CHECK(rotate(w, 7) == rotate(w, 2));
  CHECK(reversed(w).vec() == std::vector<Letter>{5, 4, 3, 2, 1});
  CycleWord a(2, {1, 2});
  CycleWord b(4, {4});
  auto c = concat(a, b);
  CHECK(c.alphabet_size() == 4);
  CHECK(c.vec() == std::vector<Letter>{1, 2, 4});
  CHECK(concat({a, b, a}, 6).alphabet_size() == 6);
}

TEST_CASE("canonical form") {
  CycleWord w(4, {3, 3, 1, 4, 2});
  auto c = canonicalize(w);
  // same class under every rotation and any relabeling
  for (std::size_t r = 0; r < w.size(); ++r) {
    CHECK(canonicalize(rotate(w, r)) == c);
    CHECK(canonicalize(relabel(rotate(w, r), {{1, 2}, {2, 1}, {3, 4}, {4, 3}}, 4)) == c);
  }
  CHECK(canonicalize(c.representative) == c);
  CHECK(c.representative.vec() == std::vector<Letter>{1, 1, 2, 3, 4});
  // reflection folding merges a word with its reverse
  CycleWord x(4, {1, 1, 2, 3, 2, 4});
  CHECK(canonicalize_with_reflection(x) == canonicalize_with_reflection(reversed(x)));
  CHECK(canonicalize_with_reflection(x) <= canonicalize(x));
}

TEST_CASE("compact digits") {
  auto w = parse_compact(10, "12 90");
  CHECK(w.vec() == std::vector<Letter>{1, 2, 9, 10});
  CHECK(to_compact(w) == "1290");
  CHECK(to_string(w) == "1 2 9 10");
  CHECK_THROWS(parse_compact(10, "1x"));
  CHECK_THROWS(to_compact(CycleWord(11, {11})));
}

TEST_CASE("binomials") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(12, 3) == 220);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
  CHECK(binomial_exact(70, 35) == boost::multiprecision::cpp_int("112186277816662845432"));
  CHECK(multiset_count(10, 3) == 220);
  CHECK(subset_count(8, 3) == 56);
}

TEST_CASE("rank and unrank are dense inverses") {
  for (int t : {2, 3, 4}) {
    auto ms = all_multisets(6, t);
    CHECK(ms.size() == multiset_count(6, t));
    std::set<std::uint64_t> ranks;
    for (const auto& k : ms) {
      const auto r = rank_multiset(k.elements());
      CHECK(r < ms.size());
      ranks.insert(r);
      CHECK(unrank_multiset(r, t) == std::vector<Letter>(k.elements().begin(), k.elements().end()));
    }
    CHECK(ranks.size() == ms.size());

    auto ss = all_subsets(7, t);
    CHECK(ss.size() == subset_count(7, t));
    for (const auto& k : ss) {
      const auto r = rank_subset(k.elements());
      CHECK(r < ss.size());
      CHECK(unrank_subset(r, t) == std::vector<Letter>(k.elements().begin(), k.elements().end()));
    }
  }
  // colex: ranks do not depend on n
  CHECK(rank_multiset(std::vector<Letter>{1, 1, 1}) == 0);
  CHECK(rank_subset(std::vector<Letter>{1, 2, 3}) == 0);
  CHECK(rank_subset(std::vector<Letter>{1, 2, 4}) == 1);
}

TEST_CASE("ucy parsing") {
  auto f = parse_ucy("4 3\n1 1 1 4 4 4 2 2 2 3 3 3 1 2 1 2 4 3 4 3\n");
  CHECK(f.n == 4);
  CHECK(f.t == 3);
  CHECK(f.word.size() == 20);
  CHECK(parse_ucy(format_ucy(f.word, 3)).word == f.word);
  CHECK(parse_ucy("2 2\n  1   2 \n\n").word.size() == 2);
  CHECK_THROWS_AS(parse_ucy("4 3\n"), FormatError);
  CHECK_THROWS_AS(parse_ucy("4\n1 2\n"), FormatError);
  CHECK_THROWS_AS(parse_ucy("4 3\n1 5\n"), FormatError);
  CHECK_THROWS_AS(parse_ucy("4 3\n1 2\n3\n"), FormatError);
  CHECK_THROWS_AS(parse_ucy("4 3\n1 b\n"), FormatError);
  CHECK_THROWS_AS(read_ucy("/nonexistent/x.ucy"), FormatError);
}
