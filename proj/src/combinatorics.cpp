#include "ucycle/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace ucycle {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is integral; divide out gcd(r, i) first so the product
    // stays as small as possible.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t num = (n - k + i) / (i / g);
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(r / g, num, &out)) {
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    r = out;
  }
  return r;
}

boost::multiprecision::cpp_int binomial_exact(unsigned n, unsigned k) {
  using boost::multiprecision::cpp_int;
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t multiset_count(int n, int t) {
  if (n < 1 || t < 0) throw std::invalid_argument("multiset_count: n >= 1, t >= 0");
  return binomial(static_cast<std::uint64_t>(n + t - 1), static_cast<std::uint64_t>(t));
}

std::uint64_t subset_count(int n, int t) {
  if (n < 0 || t < 0) throw std::invalid_argument("subset_count: n, t >= 0");
  return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t));
}

std::uint64_t rank_subset(std::span<const Letter> sorted) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    r += binomial(static_cast<std::uint64_t>(sorted[i] - 1), i + 1);
  }
  return r;
}

std::uint64_t rank_multiset(std::span<const Letter> sorted) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    r += binomial(static_cast<std::uint64_t>(sorted[i] - 1) + i, i + 1);
  }
  return r;
}

std::vector<Letter> unrank_subset(std::uint64_t rank, int t) {
  std::vector<Letter> out(static_cast<std::size_t>(t));
  for (int i = t; i >= 1; --i) {
    // largest c with C(c, i) <= rank
    std::uint64_t c = static_cast<std::uint64_t>(i) - 1;
    while (binomial(c + 1, static_cast<std::uint64_t>(i)) <= rank) ++c;
    rank -= binomial(c, static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i - 1)] = static_cast<Letter>(c + 1);
  }
  return out;
}

std::vector<Letter> unrank_multiset(std::uint64_t rank, int t) {
  auto out = unrank_subset(rank, t);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= static_cast<Letter>(i);
  return out;
}

namespace {

void enumerate(int n, int t, bool repeats, std::vector<Letter>& cur,
               std::vector<MultisetKey>& out) {
  if (static_cast<int>(cur.size()) == t) {
    out.emplace_back(cur);
    return;
  }
  const Letter lo = cur.empty() ? 1 : cur.back() + (repeats ? 0 : 1);
  for (Letter x = lo; x <= n; ++x) {
    cur.push_back(x);
    enumerate(n, t, repeats, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultisetKey> all_multisets(int n, int t) {
  std::vector<MultisetKey> out;
  out.reserve(multiset_count(n, t));
  std::vector<Letter> cur;
  enumerate(n, t, true, cur, out);
  return out;
}

std::vector<MultisetKey> all_subsets(int n, int t) {
  std::vector<MultisetKey> out;
  out.reserve(subset_count(n, t));
  std::vector<Letter> cur;
  enumerate(n, t, false, cur, out);
  return out;
}

}  // namespace ucycle
