#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gencov/core.hpp"

namespace gencov {

// Nested-ceiling bound for classical (v,k,t)-covering designs.
inline std::int64_t schonheim(std::int64_t v, std::int64_t k, std::int64_t t) {
  if (!(v >= k && k >= t && t >= 1))
    throw Error(ErrorKind::ParameterOrderViolated, "need v >= k >= t >= 1");
  __int128 x = 1;
  for (std::int64_t i = t - 1; i >= 0; --i) {
    const __int128 num = static_cast<__int128>(v - i) * x;
    const __int128 den = k - i;
    x = (num + den - 1) / den;
    if (x > std::numeric_limits<std::int64_t>::max()) throw Error(ErrorKind::InvalidInput, "bound overflows");
  }
  return static_cast<std::int64_t>(x);
}

// C(v,k,1) = max_i ceil(v_i / k_i), exactly.
inline std::int64_t lower_t1(const PartStructure& s) {
  std::int64_t best = 0;
  for (int i = 0; i < s.parts(); ++i) best = std::max(best, ceil_div(s.size(i), s.profile(i)));
  return best;
}

// Edges of the join graph divided by the edges of one k_sum-clique.
inline std::int64_t lower_edges_clique(const PartStructure& s) {
  if (s.k_sum() < 2) throw Error(ErrorKind::InvalidInput, "edge bound needs k_sum >= 2");
  auto pairs = [](std::int64_t n) { return n * (n - 1) / 2; };
  std::int64_t edges = pairs(s.v_sum());
  for (int i = 0; i < s.parts(); ++i)
    if (s.profile(i) == 1) edges -= pairs(s.size(i));
  return ceil_div(edges, pairs(s.k_sum()));
}

// Edges of K_v over edges of K_k as complete multipartite graphs.
inline std::int64_t lower_edges_multipartite(const PartStructure& s) {
  if (s.parts() < 2) throw Error(ErrorKind::SinglePart, "multipartite bound needs at least two parts");
  std::int64_t num = 0, den = 0;
  for (int i = 0; i < s.parts(); ++i)
    for (int j = i + 1; j < s.parts(); ++j) {
      num += static_cast<std::int64_t>(s.size(i)) * s.size(j);
      den += static_cast<std::int64_t>(s.profile(i)) * s.profile(j);
    }
  return ceil_div(num, den);
}

namespace detail {

inline void nested_ceiling_search(const PartStructure& s, int t, std::vector<int>& order, std::vector<char>& used,
                                  std::int64_t& best) {
  if (static_cast<int>(order.size()) == t) {
    // innermost ceiling is the last index of the ordering
    __int128 x = 1;
    for (int j = t - 1; j >= 0; --j) {
      const int i = order[static_cast<std::size_t>(j)];
      const __int128 num = static_cast<__int128>(s.size(i)) * x;
      x = (num + s.profile(i) - 1) / s.profile(i);
    }
    best = std::max(best, static_cast<std::int64_t>(x));
    return;
  }
  for (int i = 0; i < s.parts(); ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    used[static_cast<std::size_t>(i)] = 1;
    order.push_back(i);
    nested_ceiling_search(s, t, order, used, best);
    order.pop_back();
    used[static_cast<std::size_t>(i)] = 0;
  }
}

}  // namespace detail

// Max over ordered choices of t distinct parts of the nested ceiling
// ceil(v_a/k_a * ceil(v_b/k_b * ...)). Absent when t > m.
inline std::optional<std::int64_t> lower_nested_ceiling(const PartStructure& s, int t) {
  if (t < 1 || t > s.parts()) return std::nullopt;
  std::vector<int> order;
  std::vector<char> used(static_cast<std::size_t>(s.parts()), 0);
  std::int64_t best = 0;
  detail::nested_ceiling_search(s, t, order, used, best);
  return best;
}

// Schonheim bound of each single part with k_i >= 2, at strength 2; 0 if none.
inline std::int64_t lower_restriction_single(const PartStructure& s) {
  std::int64_t best = 0;
  for (int i = 0; i < s.parts(); ++i)
    if (s.profile(i) >= 2) best = std::max(best, schonheim(s.size(i), s.profile(i), 2));
  return best;
}

inline PartStructure restrict_structure(const PartStructure& s, const std::vector<int>& parts1) {
  std::vector<int> v, k;
  for (int i : parts1) {
    v.push_back(s.size(i - 1));
    k.push_back(s.profile(i - 1));
  }
  return PartStructure(std::move(v), std::move(k));
}

// Edge-counting bounds applied to every restriction with at most max_subset
// parts (skipping the degenerate single part of profile 1).
inline std::int64_t lower_restriction_all(const PartStructure& s, int max_subset) {
  std::int64_t best = 0;
  const int m = s.parts();
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int next) -> void {
    if (!chosen.empty()) {
      PartStructure r = restrict_structure(s, chosen);
      if (r.k_sum() >= 2) best = std::max(best, lower_edges_clique(r));
      if (r.parts() >= 2) best = std::max(best, lower_edges_multipartite(r));
    }
    if (static_cast<int>(chosen.size()) == max_subset) return;
    for (int i = next; i <= m; ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);
  return best;
}

struct UpperEntry {
  std::int64_t value = 0;
  Design certificate;
};

struct BoundReport {
  std::map<std::string, std::int64_t> lower;
  std::map<std::string, UpperEntry> upper;
  std::int64_t best_lower = 0;
  std::optional<std::int64_t> best_upper;
  // C(v,k,t) = 0 because no admissible tuple (or no design) exists.
  bool infeasible = false;

  void add_lower(const std::string& rule, std::int64_t value) {
    lower[rule] = value;
    best_lower = std::max(best_lower, value);
  }

  void add_upper(const std::string& rule, Design certificate) {
    const std::int64_t value = certificate.size();
    upper.insert_or_assign(rule, UpperEntry{value, std::move(certificate)});
    if (!best_upper || value < *best_upper) best_upper = value;
  }
};

struct LowerBoundOptions {
  bool all_restrictions = false;
  int max_subset = 3;
};

// Every applicable lower-bound rule, closed under strength monotonicity:
// rules for strengths t' <= t all bound C(v,k,t).
inline BoundReport lower_best(const PartStructure& s, int t, const LowerBoundOptions& options = {}) {
  BoundReport report;
  if (t > s.k_sum() || t < 0) {
    report.infeasible = true;
    report.lower["infeasible"] = 0;
    return report;
  }
  if (t == 0) {
    report.infeasible = true;
    report.lower["strength-zero"] = 0;
    return report;
  }
  report.add_lower("t1", lower_t1(s));
  if (s.parts() == 1) report.add_lower("schonheim", schonheim(s.size(0), s.profile(0), t));
  for (int tp = 1; tp <= t; ++tp)
    if (auto nc = lower_nested_ceiling(s, tp)) report.add_lower("nested-ceiling/t=" + std::to_string(tp), *nc);
  if (t >= 2) {
    report.add_lower("edges-clique", lower_edges_clique(s));
    if (s.parts() >= 2) report.add_lower("edges-multipartite", lower_edges_multipartite(s));
    report.add_lower("restriction-single", lower_restriction_single(s));
    if (options.all_restrictions) report.add_lower("restriction-all", lower_restriction_all(s, options.max_subset));
  }
  return report;
}

}  // namespace gencov
