#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "gencov/bounds.hpp"
#include "gencov/core.hpp"
#include "gencov/coverage_index.hpp"

namespace gencov {

enum class SearchStatus { Proven, BudgetExhausted };

inline const char* to_string(SearchStatus s) { return s == SearchStatus::Proven ? "proven" : "budget-exhausted"; }

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  double timeout_seconds = 60.0;
  // Top-level branches are explored by this many threads.
  int jobs = 1;
};

struct SearchResult {
  // 0 when no admissible tuple exists; otherwise the best size found.
  std::int64_t optimum = 0;
  std::optional<Design> design;
  std::uint64_t nodes = 0;
  SearchStatus status = SearchStatus::Proven;

  bool proven() const noexcept { return status == SearchStatus::Proven; }
};

namespace detail {

// Candidate blocks and tuples as a bipartite incidence in CSR form.
struct Incidence {
  std::vector<std::uint32_t> tuple_start, tuples;  // per candidate
  std::vector<std::uint32_t> cand_start, cands;    // per tuple
  std::uint32_t tuple_count = 0;
  std::uint32_t candidate_count = 0;
  int block_weight = 0;  // tuples per block (the same for every block)

  static constexpr std::uint64_t kMaxEntries = 50'000'000;

  Incidence(const CoverageIndex& index, const CandidateSpace& space) {
    tuple_count = static_cast<std::uint32_t>(index.size());
    candidate_count = static_cast<std::uint32_t>(space.size());
    tuple_start.reserve(candidate_count + 1);
    tuple_start.push_back(0);
    for (std::uint32_t c = 0; c < candidate_count; ++c) {
      index.for_each_in_block(space.block(c), [&](std::uint64_t id) { tuples.push_back(static_cast<std::uint32_t>(id)); });
      if (tuples.size() > kMaxEntries) throw Error(ErrorKind::CandidateSpaceTooLarge, "incidence structure too large");
      tuple_start.push_back(static_cast<std::uint32_t>(tuples.size()));
    }
    block_weight = candidate_count ? static_cast<int>(tuple_start[1]) : 0;
    cand_start.assign(tuple_count + 1, 0);
    for (auto u : tuples) ++cand_start[u + 1];
    for (std::uint32_t u = 0; u < tuple_count; ++u) cand_start[u + 1] += cand_start[u];
    cands.resize(tuples.size());
    std::vector<std::uint32_t> fill(cand_start.begin(), cand_start.end() - 1);
    for (std::uint32_t c = 0; c < candidate_count; ++c)
      for (auto p = tuple_start[c]; p < tuple_start[c + 1]; ++p) cands[fill[tuples[p]]++] = c;
  }
};

struct SharedBudget {
  std::uint64_t max_nodes;
  std::chrono::steady_clock::time_point deadline;
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> exhausted{false};
};

// Depth-first search for a cover with at most `limit` blocks.
class Searcher {
 public:
  Searcher(const Incidence& inc, SharedBudget& budget) : inc_(inc), budget_(budget) {
    count_.assign(inc.tuple_count, 0);
    gain_.resize(inc.candidate_count);
    for (std::uint32_t c = 0; c < inc.candidate_count; ++c) gain_[c] = static_cast<int>(inc.tuple_start[c + 1] - inc.tuple_start[c]);
    excluded_.assign(inc.candidate_count, 0);
    hist_.assign(static_cast<std::size_t>(inc.block_weight) + 1, 0);
    uncovered_ = inc.tuple_count;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<std::uint32_t>& chosen() const noexcept { return chosen_; }
  // Set by a sibling thread when this search no longer matters.
  const std::atomic<bool>* cancel = nullptr;

  void add(std::uint32_t c) {
    chosen_.push_back(c);
    for (auto p = inc_.tuple_start[c]; p < inc_.tuple_start[c + 1]; ++p) {
      const auto u = inc_.tuples[p];
      if (count_[u]++ == 0) {
        --uncovered_;
        for (auto q = inc_.cand_start[u]; q < inc_.cand_start[u + 1]; ++q) --gain_[inc_.cands[q]];
      }
    }
  }

  void remove(std::uint32_t c) {
    chosen_.pop_back();
    for (auto p = inc_.tuple_start[c]; p < inc_.tuple_start[c + 1]; ++p) {
      const auto u = inc_.tuples[p];
      if (--count_[u] == 0) {
        ++uncovered_;
        for (auto q = inc_.cand_start[u]; q < inc_.cand_start[u + 1]; ++q) ++gain_[inc_.cands[q]];
      }
    }
  }

  void exclude(std::uint32_t c) { excluded_[c] = 1; }

  // Candidates covering the first uncovered tuple at or after `from`, best gain first.
  std::vector<std::uint32_t> branches(std::uint32_t& from) const {
    while (from < inc_.tuple_count && count_[from] > 0) ++from;
    std::vector<std::uint32_t> out;
    if (from == inc_.tuple_count) return out;
    for (auto q = inc_.cand_start[from]; q < inc_.cand_start[from + 1]; ++q)
      if (!excluded_[inc_.cands[q]]) out.push_back(inc_.cands[q]);
    std::stable_sort(out.begin(), out.end(), [&](auto a, auto b) { return gain_[a] > gain_[b]; });
    return out;
  }

  // Counts this node; false when the budget or a cancellation stops the search.
  bool tick() {
    ++nodes_;
    if (cancel && cancel->load(std::memory_order_relaxed)) return false;
    if (budget_.exhausted.load(std::memory_order_relaxed)) return false;
    const auto spent = budget_.spent.fetch_add(1, std::memory_order_relaxed) + 1;
    if (spent > budget_.max_nodes || ((spent & 1023) == 0 && std::chrono::steady_clock::now() > budget_.deadline)) {
      budget_.exhausted = true;
      return false;
    }
    return true;
  }

  // True when `remaining` more blocks cannot cover what is left: the best
  // `remaining` gains among usable candidates fall short.
  bool hopeless(int remaining) {
    if (uncovered_ == 0) return false;
    if (remaining <= 0) return true;
    if (static_cast<std::uint64_t>(remaining) * static_cast<std::uint64_t>(inc_.block_weight) < uncovered_) return true;
    std::fill(hist_.begin(), hist_.end(), 0);
    for (std::uint32_t c = 0; c < inc_.candidate_count; ++c)
      if (!excluded_[c]) ++hist_[static_cast<std::size_t>(gain_[c])];
    std::uint64_t total = 0;
    int left = remaining;
    for (int g = inc_.block_weight; g > 0 && left > 0; --g) {
      const int take = std::min<std::uint64_t>(hist_[static_cast<std::size_t>(g)], static_cast<std::uint64_t>(left));
      total += static_cast<std::uint64_t>(take) * static_cast<std::uint64_t>(g);
      left -= take;
    }
    return total < uncovered_;
  }

  enum class Outcome { Found, Exhausted, Stopped };

  Outcome dfs(int remaining, std::uint32_t from) {
    if (!tick()) return Outcome::Stopped;
    if (uncovered_ == 0) return Outcome::Found;
    if (hopeless(remaining)) return Outcome::Exhausted;
    const auto options = branches(from);
    std::vector<std::uint32_t> tried;
    Outcome result = Outcome::Exhausted;
    for (auto c : options) {
      add(c);
      const Outcome o = dfs(remaining - 1, from);
      if (o == Outcome::Found) {
        result = o;
        break;
      }
      remove(c);
      if (o == Outcome::Stopped) {
        result = o;
        break;
      }
      // Covers containing c were all seen in this branch.
      exclude(c);
      tried.push_back(c);
    }
    for (auto c : tried) excluded_[c] = 0;
    return result;
  }

  std::uint32_t uncovered() const noexcept { return uncovered_; }

 private:
  const Incidence& inc_;
  SharedBudget& budget_;
  std::vector<std::uint32_t> count_;
  std::vector<int> gain_;
  std::vector<char> excluded_;
  std::vector<std::uint64_t> hist_;
  std::vector<std::uint32_t> chosen_;
  std::uint32_t uncovered_ = 0;
  std::uint64_t nodes_ = 0;
};

struct LevelResult {
  Searcher::Outcome outcome = Searcher::Outcome::Exhausted;
  std::vector<std::uint32_t> chosen;
  std::uint64_t nodes = 0;
};

inline LevelResult search_level(const Incidence& inc, SharedBudget& budget, int limit) {
  Searcher s(inc, budget);
  LevelResult r;
  r.outcome = s.dfs(limit, 0);
  r.nodes = s.nodes();
  if (r.outcome == Searcher::Outcome::Found) r.chosen = s.chosen();
  return r;
}

// The root's branches run on separate threads. The node count and the cover
// returned match the sequential search: branches after the first successful
// one are discarded.
inline LevelResult search_level_parallel(const Incidence& inc, SharedBudget& budget, int limit, int jobs) {
  Searcher root(inc, budget);
  LevelResult r;
  if (!root.tick()) {
    r.outcome = Searcher::Outcome::Stopped;
    r.nodes = 1;
    return r;
  }
  r.nodes = 1;
  if (root.uncovered() == 0) {
    r.outcome = Searcher::Outcome::Found;
    return r;
  }
  if (root.hopeless(limit)) return r;
  std::uint32_t from = 0;
  const auto options = root.branches(from);
  const std::size_t n = options.size();

  std::vector<LevelResult> per(n);
  std::vector<std::atomic<bool>> cancel(n);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{n};
  std::mutex mu;

  auto worker = [&] {
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= n) return;
      if (j > first_found.load()) continue;
      Searcher s(inc, budget);
      s.cancel = &cancel[j];
      for (std::size_t e = 0; e < j; ++e) s.exclude(options[e]);
      s.add(options[j]);
      per[j].outcome = s.dfs(limit - 1, from);
      per[j].nodes = s.nodes();
      if (per[j].outcome == Searcher::Outcome::Found) {
        per[j].chosen = s.chosen();
        std::lock_guard lock(mu);
        if (j < first_found.load()) {
          first_found = j;
          for (std::size_t e = j + 1; e < n; ++e) cancel[e] = true;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  for (std::size_t j = 0; j < n; ++j) {
    if (j > first_found.load()) break;
    r.nodes += per[j].nodes;
    if (per[j].outcome == Searcher::Outcome::Found) {
      r.outcome = Searcher::Outcome::Found;
      r.chosen = per[j].chosen;
      return r;
    }
    if (per[j].outcome == Searcher::Outcome::Stopped) {
      r.outcome = Searcher::Outcome::Stopped;
      return r;
    }
  }
  return r;
}

}  // namespace detail

// Exact covering number at lambda = 1 by branch and bound. Each limit L from
// the best lower bound upward is tried in turn; the greedy cover is the
// incumbent and the fallback when the budget runs out.
inline SearchResult exact_min(const PartStructure& s, int t, const SearchBudget& budget = {}) {
  SearchResult result;
  if (t <= 0) {
    result.design = Design(s, 0, 1, {});
    return result;
  }
  if (t > s.k_sum()) return result;

  CandidateSpace space(s);
  CoverageIndex index(s, t);
  Design incumbent = greedy_cover(s, t);
  const std::int64_t lower = lower_best(s, t).best_lower;
  result.optimum = incumbent.size();
  result.design = incumbent;
  if (lower >= incumbent.size()) return result;

  const detail::Incidence inc(index, space);
  detail::SharedBudget shared{budget.max_nodes,
                              std::chrono::steady_clock::now() +
                                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                      std::chrono::duration<double>(budget.timeout_seconds))};
  for (std::int64_t limit = lower; limit < incumbent.size(); ++limit) {
    const auto level = budget.jobs > 1 ? detail::search_level_parallel(inc, shared, static_cast<int>(limit), budget.jobs)
                                       : detail::search_level(inc, shared, static_cast<int>(limit));
    result.nodes += level.nodes;
    if (level.outcome == detail::Searcher::Outcome::Stopped) {
      result.status = SearchStatus::BudgetExhausted;
      return result;
    }
    if (level.outcome == detail::Searcher::Outcome::Found) {
      std::vector<std::uint32_t> chosen = level.chosen;
      std::sort(chosen.begin(), chosen.end());
      std::vector<Block> blocks;
      for (auto c : chosen) blocks.push_back(space.block(c));
      result.optimum = static_cast<std::int64_t>(blocks.size());
      result.design = Design(s, t, 1, std::move(blocks));
      return result;
    }
  }
  return result;
}

// exact_min on the single-part structure (v), (k).
inline SearchResult certify_classical(int v, int k, int t, const SearchBudget& budget = {}) {
  if (!(v >= k && k >= t && t >= 1)) throw Error(ErrorKind::ParameterOrderViolated, "need v >= k >= t >= 1");
  return exact_min(make_structure({v}, {k}), t, budget);
}

}  // namespace gencov
