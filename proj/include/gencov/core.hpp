#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gencov/combinatorics.hpp"
#include "gencov/error.hpp"

namespace gencov {

// Part sizes v and block profile k of a generalized covering design.
// Parts are numbered from 1 in every public interface that takes a part index.
class PartStructure {
 public:
  PartStructure(std::vector<int> sizes, std::vector<int> profile) : v_(std::move(sizes)), k_(std::move(profile)) {
    if (v_.empty() || v_.size() != k_.size())
      throw Error(ErrorKind::LengthMismatch, "v and k must be nonempty and of equal length");
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (v_[i] < 1 || k_[i] < 1)
        throw Error(ErrorKind::NonPositiveEntry, "part " + std::to_string(i + 1) + " has a non-positive entry");
      if (k_[i] > v_[i])
        throw Error(ErrorKind::ProfileExceedsPart, "part " + std::to_string(i + 1) + " has k_i > v_i");
    }
  }

  const std::vector<int>& sizes() const noexcept { return v_; }
  const std::vector<int>& profile() const noexcept { return k_; }
  int parts() const noexcept { return static_cast<int>(v_.size()); }
  int size(int index0) const { return v_.at(static_cast<std::size_t>(index0)); }
  int profile(int index0) const { return k_.at(static_cast<std::size_t>(index0)); }

  int v_sum() const { return std::accumulate(v_.begin(), v_.end(), 0); }
  int k_sum() const { return std::accumulate(k_.begin(), k_.end(), 0); }
  int v_max() const { return *std::max_element(v_.begin(), v_.end()); }
  int k_min() const { return *std::min_element(k_.begin(), k_.end()); }

  bool unit_profile() const {
    return std::all_of(k_.begin(), k_.end(), [](int x) { return x == 1; });
  }

  // Number of distinct blocks, saturating.
  std::uint64_t candidate_blocks() const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < v_.size(); ++i) n = saturating_mul(n, binomial(v_[i], k_[i]));
    return n;
  }

  friend bool operator==(const PartStructure&, const PartStructure&) = default;

 private:
  std::vector<int> v_;
  std::vector<int> k_;
};

inline PartStructure make_structure(std::vector<int> v, std::vector<int> k) {
  return PartStructure(std::move(v), std::move(k));
}

// One k_i-subset per part. Parts are kept sorted ascending.
class Block {
 public:
  Block() = default;
  explicit Block(std::vector<PointSet> parts) : parts_(std::move(parts)) {
    for (auto& p : parts_) std::sort(p.begin(), p.end());
  }

  const std::vector<PointSet>& parts() const noexcept { return parts_; }
  const PointSet& part(int index0) const { return parts_.at(static_cast<std::size_t>(index0)); }
  int parts_count() const noexcept { return static_cast<int>(parts_.size()); }

  // Throws InvalidBlock unless the block has |part i| = k_i distinct labels in 1..v_i.
  void validate(const PartStructure& s) const {
    if (parts_count() != s.parts())
      throw Error(ErrorKind::InvalidBlock, "block has " + std::to_string(parts_.size()) + " parts, expected " +
                                               std::to_string(s.parts()));
    for (int i = 0; i < s.parts(); ++i) {
      const PointSet& p = parts_[static_cast<std::size_t>(i)];
      if (static_cast<int>(p.size()) != s.profile(i))
        throw Error(ErrorKind::InvalidBlock, "part " + std::to_string(i + 1) + " has " + std::to_string(p.size()) +
                                                 " points, expected " + std::to_string(s.profile(i)));
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] < 1 || p[j] > s.size(i))
          throw Error(ErrorKind::InvalidBlock, "label " + std::to_string(p[j]) + " outside 1.." +
                                                   std::to_string(s.size(i)) + " in part " + std::to_string(i + 1));
        if (j > 0 && p[j] == p[j - 1])
          throw Error(ErrorKind::InvalidBlock, "repeated label " + std::to_string(p[j]) + " in part " +
                                                   std::to_string(i + 1));
      }
    }
  }

  friend auto operator<=>(const Block&, const Block&) = default;
  friend bool operator==(const Block&, const Block&) = default;

 private:
  std::vector<PointSet> parts_;
};

// A structure, a strength t, a multiplicity lambda and an ordered multiset of blocks.
class Design {
 public:
  Design(PartStructure structure, int t, int lambda, std::vector<Block> blocks)
      : structure_(std::move(structure)), t_(t), lambda_(lambda), blocks_(std::move(blocks)) {
    if (t_ < 0) throw Error(ErrorKind::InvalidInput, "strength must be non-negative");
    if (t_ > structure_.k_sum())
      throw Error(ErrorKind::StrengthTooLarge, "t = " + std::to_string(t_) + " exceeds k_sum = " +
                                                   std::to_string(structure_.k_sum()));
    if (lambda_ < 1) throw Error(ErrorKind::InvalidInput, "lambda must be positive");
    for (const Block& b : blocks_) b.validate(structure_);
  }

  const PartStructure& structure() const noexcept { return structure_; }
  int strength() const noexcept { return t_; }
  int lambda() const noexcept { return lambda_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  int size() const noexcept { return static_cast<int>(blocks_.size()); }

  friend bool operator==(const Design&, const Design&) = default;

 private:
  PartStructure structure_;
  int t_;
  int lambda_;
  std::vector<Block> blocks_;
};

// A (k,t)-admissible weight vector.
struct Pattern {
  std::vector<int> weights;

  int strength() const { return std::accumulate(weights.begin(), weights.end(), 0); }
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

// An m-tuple of point sets; T_i has |T_i| = weights_i for some pattern.
struct SetTuple {
  std::vector<PointSet> parts;

  int weight() const {
    int w = 0;
    for (const auto& p : parts) w += static_cast<int>(p.size());
    return w;
  }
  friend auto operator<=>(const SetTuple&, const SetTuple&) = default;
};

// All (k,t)-admissible patterns, listed in descending lexicographic order so the
// heaviest first part comes first, e.g. (2,0,0),(1,1,0),(1,0,1),(0,1,1).
inline std::vector<Pattern> admissible_patterns(const PartStructure& s, int t) {
  if (t < 0) throw Error(ErrorKind::InvalidInput, "strength must be non-negative");
  if (t > s.k_sum()) throw Error(ErrorKind::StrengthTooLarge, "t exceeds k_sum");
  const int m = s.parts();
  std::vector<int> suffix(static_cast<std::size_t>(m) + 1, 0);
  for (int i = m - 1; i >= 0; --i) suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + s.profile(i);

  std::vector<Pattern> out;
  std::vector<int> w(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == m) {
      if (remaining == 0) out.push_back(Pattern{w});
      return;
    }
    const int hi = std::min(remaining, s.profile(i));
    const int lo = std::max(0, remaining - suffix[static_cast<std::size_t>(i) + 1]);
    for (int x = hi; x >= lo; --x) {
      w[static_cast<std::size_t>(i)] = x;
      self(self, i + 1, remaining - x);
    }
    w[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, t);
  return out;
}

// Number of set tuples with the given pattern: prod C(v_i, t_i), saturating.
inline std::uint64_t tuple_count(const PartStructure& s, const Pattern& p) {
  std::uint64_t n = 1;
  for (int i = 0; i < s.parts(); ++i) n = saturating_mul(n, binomial(s.size(i), p.weights[static_cast<std::size_t>(i)]));
  return n;
}

// Lazy lexicographic stream of the set tuples matching one pattern. The last
// part varies fastest. Single consumer.
class TupleEnumerator {
 public:
  TupleEnumerator(const PartStructure& s, Pattern p) : sizes_(s.sizes()), pattern_(std::move(p)) {
    if (static_cast<int>(pattern_.weights.size()) != s.parts())
      throw Error(ErrorKind::StructureMismatch, "pattern length differs from part count");
    for (int i = 0; i < s.parts(); ++i) {
      const int w = pattern_.weights[static_cast<std::size_t>(i)];
      if (w < 0 || w > s.profile(i)) throw Error(ErrorKind::InvalidInput, "pattern is not admissible");
      current_.parts.push_back(first_combination(w));
    }
  }

  // Writes the next tuple into out; false once the stream is exhausted.
  bool next(SetTuple& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      out = current_;
      return true;
    }
    for (int i = static_cast<int>(sizes_.size()) - 1; i >= 0; --i) {
      PointSet& c = current_.parts[static_cast<std::size_t>(i)];
      if (!c.empty() && next_combination(c, sizes_[static_cast<std::size_t>(i)])) {
        out = current_;
        return true;
      }
      c = first_combination(static_cast<int>(c.size()));
    }
    done_ = true;
    return false;
  }

  const Pattern& pattern() const noexcept { return pattern_; }

 private:
  std::vector<int> sizes_;
  Pattern pattern_;
  SetTuple current_;
  bool started_ = false;
  bool done_ = false;
};

inline TupleEnumerator admissible_tuples(const PartStructure& s, const Pattern& p) { return TupleEnumerator(s, p); }

// T is contained in B iff T_i is a subset of B_i for every part.
inline bool tuple_in_block(const SetTuple& tuple, const Block& block) {
  if (static_cast<int>(tuple.parts.size()) != block.parts_count())
    throw Error(ErrorKind::StructureMismatch, "tuple and block have different part counts");
  for (std::size_t i = 0; i < tuple.parts.size(); ++i) {
    const PointSet& b = block.parts()[i];
    if (!std::includes(b.begin(), b.end(), tuple.parts[i].begin(), tuple.parts[i].end())) return false;
  }
  return true;
}

// Rows are label vectors: entry j of a row lies in 1..alphabet[j].
using ArrayRows = std::vector<std::vector<int>>;

inline Design from_covering_array(const ArrayRows& rows, const std::vector<int>& alphabet, int t, int lambda = 1) {
  PartStructure s(alphabet, std::vector<int>(alphabet.size(), 1));
  std::vector<Block> blocks;
  blocks.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != alphabet.size())
      throw Error(ErrorKind::LengthMismatch, "row " + std::to_string(r + 1) + " has the wrong number of columns");
    std::vector<PointSet> parts;
    for (std::size_t c = 0; c < alphabet.size(); ++c) {
      const int x = rows[r][c];
      if (x < 1 || x > alphabet[c])
        throw Error(ErrorKind::EntryOutOfAlphabet, "row " + std::to_string(r + 1) + ", column " +
                                                       std::to_string(c + 1) + ": " + std::to_string(x));
      parts.push_back({x});
    }
    blocks.emplace_back(std::move(parts));
  }
  return Design(std::move(s), t, lambda, std::move(blocks));
}

inline ArrayRows to_covering_array(const Design& d) {
  if (!d.structure().unit_profile()) throw Error(ErrorKind::NotUnitProfile, "covering arrays need k = 1^m");
  ArrayRows rows;
  rows.reserve(d.blocks().size());
  for (const Block& b : d.blocks()) {
    std::vector<int> row;
    for (const PointSet& p : b.parts()) row.push_back(p.front());
    rows.push_back(std::move(row));
  }
  return rows;
}

// Drops repeated blocks, keeping the first occurrence of each.
inline Design deduplicate(const Design& d) {
  std::set<Block> seen;
  std::vector<Block> kept;
  for (const Block& b : d.blocks())
    if (seen.insert(b).second) kept.push_back(b);
  return Design(d.structure(), d.strength(), d.lambda(), std::move(kept));
}

inline std::string to_string(const PointSet& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "}";
}

inline std::string to_string(const std::vector<PointSet>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += to_string(parts[i]);
  }
  return s + ")";
}

inline std::string to_string(const SetTuple& t) { return to_string(t.parts); }
inline std::string to_string(const Block& b) { return to_string(b.parts()); }

inline std::string join_ints(const std::vector<int>& xs, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace gencov
