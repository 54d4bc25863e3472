#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace gencov {

// Sorted, duplicate-free set of 1-based point labels.
using PointSet = std::vector<int>;

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// Binomial coefficient, saturating at kSaturated instead of overflowing.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

inline std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

// First k-subset of {1..n} in lexicographic order.
inline PointSet first_combination(int k) {
  PointSet c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  return c;
}

// Advances c to the lexicographic successor among k-subsets of {1..n}.
// Returns false (leaving c unspecified) when c was the last one.
inline bool next_combination(PointSet& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

inline std::vector<PointSet> all_combinations(int n, int k) {
  std::vector<PointSet> out;
  if (k < 0 || k > n) return out;
  PointSet c = first_combination(k);
  do {
    out.push_back(c);
  } while (next_combination(c, n));
  return out;
}

// Position of c in the lexicographic listing of k-subsets of {1..n}.
inline std::uint64_t combination_rank(std::span<const int> c, int n) {
  const int k = static_cast<int>(c.size());
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int x = prev + 1; x < c[static_cast<std::size_t>(i)]; ++x) rank += binomial(n - x, k - i - 1);
    prev = c[static_cast<std::size_t>(i)];
  }
  return rank;
}

}  // namespace gencov
