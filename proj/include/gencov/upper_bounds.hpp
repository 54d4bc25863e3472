#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gencov/bounds.hpp"
#include "gencov/construct.hpp"
#include "gencov/search.hpp"
#include "gencov/verify.hpp"

namespace gencov {

// A (w, k, 2)-covering design that needs no search: the points are cut into
// groups of floor(k/2) and every pair of groups shares a block.
inline Design grouped_pair_cover(int w, int k) {
  if (!(w >= k && k >= 2)) throw Error(ErrorKind::ParameterOrderViolated, "need w >= k >= 2");
  const int g = k / 2;
  const int groups = static_cast<int>(ceil_div(w, g));
  auto group = [&](int a) {
    PointSet p;
    for (int x = a * g + 1; x <= std::min(w, (a + 1) * g); ++x) p.push_back(x);
    return p;
  };
  std::vector<Block> blocks;
  for (int a = 0; a < groups; ++a)
    for (int b = groups == 1 ? a : a + 1; b < std::max(groups, 1); ++b) {
      PointSet p = group(a);
      if (b != a) {
        auto q = group(b);
        p.insert(p.end(), q.begin(), q.end());
      }
      std::sort(p.begin(), p.end());
      detail::fill_least(p, k - static_cast<int>(p.size()), w);
      blocks.emplace_back(std::vector<PointSet>{std::move(p)});
    }
  return deduplicate(Design(make_structure({w}, {k}), 2, 1, std::move(blocks)));
}

struct MinimaxResult {
  std::int64_t value = 0;
  Design certificate;
  // The base design was proven optimal by the search.
  bool base_proven = false;
};

// The best classical (w, k, 2)-covering design reachable within the budget:
// proven optimum, else the search's best, else the grouped construction.
inline SearchResult classical_base(int w, int k, const SearchBudget& budget) {
  try {
    return certify_classical(w, k, 2, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CandidateSpaceTooLarge) throw;
  }
  SearchResult r;
  r.design = grouped_pair_cover(w, k);
  r.optimum = r.design->size();
  r.status = SearchStatus::BudgetExhausted;
  return r;
}

// Lifts an optimal (w, k_min, 2)-covering design, w = max_j(v_j - (k_j - k_min)),
// to a strength-2 design over s.
inline MinimaxResult upper_minimax(const PartStructure& s, const SearchBudget& budget = {}) {
  if (s.k_min() < 2) throw Error(ErrorKind::UnitProfilePart, "minimax needs every k_i >= 2");
  int w = 0;
  for (int i = 0; i < s.parts(); ++i) w = std::max(w, s.size(i) - (s.profile(i) - s.k_min()));
  const SearchResult base = classical_base(w, s.k_min(), budget);
  Design lifted = construct_minimax(s, *base.design);
  if (!is_valid(lifted)) throw Error(ErrorKind::InvalidInput, "lifted design failed verification");
  const std::int64_t value = lifted.size();
  return {value, std::move(lifted), base.proven()};
}

struct BoundOptions {
  LowerBoundOptions lower;
  // Budget for searches run to build upper-bound certificates.
  SearchBudget budget{200'000, 5.0, 1};
  // Greedy certificates are built only below this many candidate blocks.
  std::uint64_t greedy_candidate_limit = 20'000;
};

// Lower bounds plus verified upper-bound certificates.
inline BoundReport bound_report(const PartStructure& s, int t, const BoundOptions& options = {}) {
  BoundReport report = lower_best(s, t, options.lower);
  if (report.infeasible) return report;

  auto add_checked = [&](const std::string& rule, Design d) {
    if (is_valid(d)) report.add_upper(rule, std::move(d));
  };
  if (t == 1) add_checked("t1-cyclic", strength_one_cover(s));
  if (t == 2 && s.k_min() >= 2) add_checked("minimax", upper_minimax(s, options.budget).certificate);
  if (s.candidate_blocks() <= options.greedy_candidate_limit) {
    try {
      add_checked("greedy", greedy_cover(s, t));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CandidateSpaceTooLarge) throw;
    }
  }
  return report;
}

}  // namespace gencov
