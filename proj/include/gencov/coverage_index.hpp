#pragma once

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "gencov/core.hpp"

namespace gencov {

// Dense numbering of the admissible set tuples of a structure at strength t:
// patterns in admissible_patterns order, tuples lexicographic inside a pattern.
// Independent of the mask-based verifier; the search and greedy code count
// coverage through it.
class CoverageIndex {
 public:
  static constexpr std::uint64_t kMaxTuples = std::uint64_t{1} << 31;

  CoverageIndex(const PartStructure& s, int t) : structure_(s), t_(t) {
    if (t > 0) patterns_ = admissible_patterns(s, t);
    std::uint64_t offset = 0;
    for (const auto& p : patterns_) {
      offsets_.push_back(offset);
      offset = saturating_add(offset, tuple_count(s, p));
    }
    if (offset > kMaxTuples) throw Error(ErrorKind::CandidateSpaceTooLarge, "too many admissible tuples to index");
    total_ = offset;
  }

  const PartStructure& structure() const noexcept { return structure_; }
  int strength() const noexcept { return t_; }
  const std::vector<Pattern>& patterns() const noexcept { return patterns_; }
  std::uint64_t size() const noexcept { return total_; }

  std::uint64_t rank(const SetTuple& tuple) const {
    for (std::size_t p = 0; p < patterns_.size(); ++p) {
      bool match = true;
      for (int i = 0; i < structure_.parts() && match; ++i)
        match = static_cast<int>(tuple.parts[static_cast<std::size_t>(i)].size()) == patterns_[p].weights[static_cast<std::size_t>(i)];
      if (!match) continue;
      std::uint64_t r = 0;
      for (int i = 0; i < structure_.parts(); ++i) {
        const int w = patterns_[p].weights[static_cast<std::size_t>(i)];
        r = r * binomial(structure_.size(i), w) + combination_rank(tuple.parts[static_cast<std::size_t>(i)], structure_.size(i));
      }
      return offsets_[p] + r;
    }
    throw Error(ErrorKind::InvalidInput, "tuple does not match any admissible pattern");
  }

  SetTuple unrank(std::uint64_t id) const {
    std::size_t p = patterns_.size() - 1;
    while (offsets_[p] > id) --p;
    std::uint64_t r = id - offsets_[p];
    SetTuple t;
    t.parts.resize(static_cast<std::size_t>(structure_.parts()));
    for (int i = structure_.parts() - 1; i >= 0; --i) {
      const int w = patterns_[p].weights[static_cast<std::size_t>(i)];
      const std::uint64_t radix = binomial(structure_.size(i), w);
      t.parts[static_cast<std::size_t>(i)] = all_combinations(structure_.size(i), w)[static_cast<std::size_t>(r % radix)];
      r /= radix;
    }
    return t;
  }

  // Calls fn(id) for every admissible tuple contained in the block.
  template <class Fn>
  void for_each_in_block(const Block& b, Fn&& fn) const {
    const int m = structure_.parts();
    // ranks[i][w] = ranks of the w-subsets of part i of the block
    std::vector<std::vector<std::vector<std::uint64_t>>> ranks(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const PointSet& part = b.part(i);
      const int k = static_cast<int>(part.size());
      auto& per_weight = ranks[static_cast<std::size_t>(i)];
      per_weight.resize(static_cast<std::size_t>(std::min(k, t_)) + 1);
      for (int w = 0; w <= std::min(k, t_); ++w) {
        if (w == 0) {
          per_weight[0] = {0};
          continue;
        }
        PointSet pos = first_combination(w);
        PointSet sub(static_cast<std::size_t>(w));
        do {
          for (int j = 0; j < w; ++j) sub[static_cast<std::size_t>(j)] = part[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)] - 1)];
          per_weight[static_cast<std::size_t>(w)].push_back(combination_rank(sub, structure_.size(i)));
        } while (next_combination(pos, k));
      }
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(m));
    for (std::size_t p = 0; p < patterns_.size(); ++p) {
      const auto& w = patterns_[p].weights;
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        std::uint64_t r = 0;
        for (int i = 0; i < m; ++i) {
          const auto ui = static_cast<std::size_t>(i);
          r = r * binomial(structure_.size(i), w[ui]) + ranks[ui][static_cast<std::size_t>(w[ui])][idx[ui]];
        }
        fn(offsets_[p] + r);
        int i = m - 1;
        for (; i >= 0; --i) {
          const auto ui = static_cast<std::size_t>(i);
          if (++idx[ui] < ranks[ui][static_cast<std::size_t>(w[ui])].size()) break;
          idx[ui] = 0;
        }
        if (i < 0) break;
      }
    }
  }

 private:
  PartStructure structure_;
  int t_;
  std::vector<Pattern> patterns_;
  std::vector<std::uint64_t> offsets_;
  std::uint64_t total_ = 0;
};

// All blocks of a structure in lexicographic order, addressed by index.
class CandidateSpace {
 public:
  static constexpr std::uint64_t kMaxCandidates = 1'000'000;

  explicit CandidateSpace(const PartStructure& s, std::uint64_t limit = kMaxCandidates) : structure_(s) {
    const std::uint64_t n = s.candidate_blocks();
    if (n > limit)
      throw Error(ErrorKind::CandidateSpaceTooLarge,
                  "structure has more than " + std::to_string(limit) + " candidate blocks");
    count_ = n;
    for (int i = 0; i < s.parts(); ++i) per_part_.push_back(all_combinations(s.size(i), s.profile(i)));
  }

  std::uint64_t size() const noexcept { return count_; }

  Block block(std::uint64_t index) const {
    std::vector<PointSet> parts(per_part_.size());
    for (int i = static_cast<int>(per_part_.size()) - 1; i >= 0; --i) {
      const auto& list = per_part_[static_cast<std::size_t>(i)];
      parts[static_cast<std::size_t>(i)] = list[static_cast<std::size_t>(index % list.size())];
      index /= list.size();
    }
    return Block(std::move(parts));
  }

 private:
  PartStructure structure_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<PointSet>> per_part_;
};

// Greedy cover at lambda = 1: repeatedly takes the block covering the most
// uncovered tuples, ties going to the lexicographically smallest block.
inline Design greedy_cover(const PartStructure& s, int t) {
  if (t > s.k_sum()) throw Error(ErrorKind::StrengthTooLarge, "t exceeds k_sum");
  CoverageIndex index(s, t);
  CandidateSpace space(s);
  std::vector<char> covered(static_cast<std::size_t>(index.size()), 0);
  std::uint64_t remaining = index.size();

  auto gain_of = [&](std::uint64_t c) {
    std::uint64_t g = 0;
    index.for_each_in_block(space.block(c), [&](std::uint64_t id) { g += covered[static_cast<std::size_t>(id)] == 0; });
    return g;
  };

  // Max-heap on (gain, -index); stored gains only ever overestimate.
  using Entry = std::pair<std::uint64_t, std::int64_t>;
  std::priority_queue<Entry> heap;
  if (remaining > 0)
    for (std::uint64_t c = 0; c < space.size(); ++c) heap.emplace(gain_of(c), -static_cast<std::int64_t>(c));

  std::vector<Block> chosen;
  while (remaining > 0 && !heap.empty()) {
    auto [stored, neg] = heap.top();
    heap.pop();
    const auto c = static_cast<std::uint64_t>(-neg);
    const std::uint64_t g = gain_of(c);
    if (g == 0) continue;
    if (g < stored) {
      heap.emplace(g, neg);
      continue;
    }
    Block b = space.block(c);
    index.for_each_in_block(b, [&](std::uint64_t id) {
      if (!covered[static_cast<std::size_t>(id)]) {
        covered[static_cast<std::size_t>(id)] = 1;
        --remaining;
      }
    });
    chosen.push_back(std::move(b));
  }
  return Design(s, t, 1, std::move(chosen));
}

}  // namespace gencov
