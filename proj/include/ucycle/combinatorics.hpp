#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ucycle/core.hpp"

namespace ucycle {

// C(n, k) in 64 bits; throws std::overflow_error when it does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// C(n, k) with no size limit.
boost::multiprecision::cpp_int binomial_exact(unsigned n, unsigned k);

// Number of t-multisets over [n]: C(n+t-1, t).
std::uint64_t multiset_count(int n, int t);

// Number of t-subsets of [n]: C(n, t).
std::uint64_t subset_count(int n, int t);

// Combinatorial number system (colex order). Letters are 1-based and must be
// sorted; a multiset x1<=...<=xt is ranked through the strictly increasing
// shift c_i = (x_i - 1) + i. Ranks are dense: 0 .. count-1, independent of n.
std::uint64_t rank_subset(std::span<const Letter> sorted);
std::uint64_t rank_multiset(std::span<const Letter> sorted);
std::vector<Letter> unrank_subset(std::uint64_t rank, int t);
std::vector<Letter> unrank_multiset(std::uint64_t rank, int t);

// Every t-multiset (t-subset) over [n], ascending lexicographic order.
std::vector<MultisetKey> all_multisets(int n, int t);
std::vector<MultisetKey> all_subsets(int n, int t);

}  // namespace ucycle
