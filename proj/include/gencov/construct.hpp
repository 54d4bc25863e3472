#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gencov/bounds.hpp"
#include "gencov/core.hpp"
#include "gencov/coverage_index.hpp"
#include "gencov/verify.hpp"

namespace gencov {

namespace detail {

inline void require_lambda_one(const Design& d, const char* op) {
  if (d.lambda() != 1) throw Error(ErrorKind::LambdaUnsupported, std::string(op) + " assumes lambda = 1");
}

// The clique-covering arguments only hold at strength 2 (they hold trivially at t <= 1).
inline void require_strength_at_most_two(const Design& d, const char* op) {
  if (d.strength() > 2) throw Error(ErrorKind::StrengthUnsupported, std::string(op) + " needs t <= 2");
}

inline void check_part_index(const PartStructure& s, int part) {
  if (part < 1 || part > s.parts())
    throw Error(ErrorKind::InvalidInput, "part index " + std::to_string(part) + " outside 1.." +
                                             std::to_string(s.parts()));
}

// Adds the `count` smallest labels of 1..n missing from p.
inline void fill_least(PointSet& p, int count, int n) {
  PointSet added;
  for (int x = 1; x <= n && static_cast<int>(added.size()) < count; ++x)
    if (!std::binary_search(p.begin(), p.end(), x)) added.push_back(x);
  p.insert(p.end(), added.begin(), added.end());
  std::sort(p.begin(), p.end());
}

}  // namespace detail

// Greedy (v,k,t)-covering design: the block covering the most uncovered
// t-subsets is added until all are covered, lexicographic tie-break.
inline Design greedy_classical_cover(int v, int k, int t) {
  if (!(v >= k && k >= t && t >= 1)) throw Error(ErrorKind::ParameterOrderViolated, "need v >= k >= t >= 1");
  return greedy_cover(make_structure({v}, {k}), t);
}

// An optimal strength-1 design: block j takes k_i consecutive labels of each
// part, starting at j*k_i + 1 and wrapping around.
inline Design strength_one_cover(const PartStructure& s) {
  const auto n = lower_t1(s);
  std::vector<Block> blocks;
  for (std::int64_t j = 0; j < n; ++j) {
    std::vector<PointSet> parts;
    for (int i = 0; i < s.parts(); ++i) {
      PointSet p;
      for (int a = 0; a < s.profile(i); ++a) p.push_back(static_cast<int>((j * s.profile(i) + a) % s.size(i)) + 1);
      parts.push_back(std::move(p));
    }
    blocks.emplace_back(std::move(parts));
  }
  return Design(s, 1, 1, std::move(blocks));
}

struct PlaceholderPart {
  PointSet points;
  int placeholders = 0;
  friend auto operator<=>(const PlaceholderPart&, const PlaceholderPart&) = default;
};

struct PlaceholderBlock {
  std::vector<PlaceholderPart> parts;
  friend auto operator<=>(const PlaceholderBlock&, const PlaceholderBlock&) = default;
};

// A design whose blocks may keep don't-care positions.
struct PlaceholderDesign {
  PartStructure structure;
  int t = 2;
  int lambda = 1;
  std::vector<PlaceholderBlock> blocks;
};

// Replaces every placeholder with the least label of its part not already in
// the block, then removes repeated blocks.
inline Design fill_placeholders(const PlaceholderDesign& pd) {
  std::vector<Block> blocks;
  for (const auto& pb : pd.blocks) {
    if (static_cast<int>(pb.parts.size()) != pd.structure.parts())
      throw Error(ErrorKind::InvalidBlock, "placeholder block has the wrong number of parts");
    std::vector<PointSet> parts;
    for (int i = 0; i < pd.structure.parts(); ++i) {
      PointSet p = pb.parts[static_cast<std::size_t>(i)].points;
      std::sort(p.begin(), p.end());
      if (static_cast<int>(p.size()) + pb.parts[static_cast<std::size_t>(i)].placeholders != pd.structure.profile(i))
        throw Error(ErrorKind::InvalidBlock, "placeholder block part " + std::to_string(i + 1) + " has the wrong size");
      detail::fill_least(p, pb.parts[static_cast<std::size_t>(i)].placeholders, pd.structure.size(i));
      parts.push_back(std::move(p));
    }
    blocks.emplace_back(std::move(parts));
  }
  return deduplicate(Design(pd.structure, pd.t, pd.lambda, std::move(blocks)));
}

// Lifts a (w, k0, 2)-covering design onto the structure s. Each part starts as
// a copy of the base; points above v_i become placeholders and k_i - k0 more
// placeholders are appended. A part with v_i > w first sets aside its top
// v_i - w points, which then sit in every block (amalgamation with a full part).
inline PlaceholderDesign construct_minimax_placeholders(const PartStructure& s, const Design& base) {
  if (s.k_min() < 2) throw Error(ErrorKind::ProfileBelowTwo, "every k_i must be at least 2");
  if (base.structure().parts() != 1) throw Error(ErrorKind::StructureMismatch, "base must be a single-part design");
  if (base.strength() != 2) throw Error(ErrorKind::StrengthNotTwo, "base must have strength 2");
  detail::require_lambda_one(base, "construct_minimax");
  const int w = base.structure().size(0);
  const int k0 = base.structure().profile(0);
  if (k0 < 2) throw Error(ErrorKind::ProfileBelowTwo, "base blocks must have at least 2 points");
  if (k0 > s.k_min()) throw Error(ErrorKind::InvalidInput, "base block size exceeds k_min");
  for (int i = 0; i < s.parts(); ++i)
    if (s.size(i) - (s.profile(i) - k0) > w)
      throw Error(ErrorKind::BasePartTooSmall, "base has " + std::to_string(w) + " points but part " +
                                                   std::to_string(i + 1) + " needs " +
                                                   std::to_string(s.size(i) - (s.profile(i) - k0)));

  PlaceholderDesign out{s, 2, 1, {}};
  std::set<PlaceholderBlock> seen;
  for (const Block& b : base.blocks()) {
    PlaceholderBlock pb;
    for (int i = 0; i < s.parts(); ++i) {
      const int reserved = std::max(0, s.size(i) - w);
      const int kept_range = s.size(i) - reserved;
      PlaceholderPart part;
      for (int x : b.part(0))
        if (x <= kept_range) part.points.push_back(x);
      part.placeholders = (s.profile(i) - reserved) - static_cast<int>(part.points.size());
      for (int x = kept_range + 1; x <= s.size(i); ++x) part.points.push_back(x);
      pb.parts.push_back(std::move(part));
    }
    if (seen.insert(pb).second) out.blocks.push_back(std::move(pb));
  }
  return out;
}

inline Design construct_minimax(const PartStructure& s, const Design& base) {
  return fill_placeholders(construct_minimax_placeholders(s, base));
}

// Componentwise restriction to the 1-based parts in `parts`. The strength is
// capped at the restricted k_sum.
inline Design restrict(const Design& d, std::vector<int> parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyIndexSet, "restriction needs at least one part");
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  for (int i : parts) detail::check_part_index(d.structure(), i);
  PartStructure r = restrict_structure(d.structure(), parts);
  if (r.parts() == 1 && r.profile(0) == 1)
    throw Error(ErrorKind::DegenerateRestriction, "restriction to a single part of profile 1");
  std::vector<Block> blocks;
  for (const Block& b : d.blocks()) {
    std::vector<PointSet> ps;
    for (int i : parts) ps.push_back(b.part(i - 1));
    blocks.emplace_back(std::move(ps));
  }
  const int t = std::min(d.strength(), r.k_sum());
  return Design(std::move(r), t, d.lambda(), std::move(blocks));
}

// Removes every part with v_i = k_i.
inline Design drop_full_parts(const Design& d) {
  std::vector<int> keep;
  for (int i = 0; i < d.structure().parts(); ++i)
    if (d.structure().size(i) != d.structure().profile(i)) keep.push_back(i + 1);
  if (static_cast<int>(keep.size()) == d.structure().parts()) return d;
  if (keep.empty()) throw Error(ErrorKind::DegenerateRestriction, "every part is full");
  return restrict(d, keep);
}

// Appends full parts of the given sizes; each block receives all of their points.
inline Design add_full_parts(const Design& d, const std::vector<int>& sizes) {
  std::vector<int> v = d.structure().sizes(), k = d.structure().profile();
  for (int n : sizes) {
    if (n < 1) throw Error(ErrorKind::NonPositiveEntry, "full part sizes must be positive");
    v.push_back(n);
    k.push_back(n);
  }
  std::vector<Block> blocks;
  for (const Block& b : d.blocks()) {
    auto ps = b.parts();
    for (int n : sizes) ps.push_back(first_combination(n));
    blocks.emplace_back(std::move(ps));
  }
  return Design(PartStructure(std::move(v), std::move(k)), d.strength(), d.lambda(), std::move(blocks));
}

// Appends a copy of part `part` (1-based): every block repeats its labels there.
inline Design expand_equivalent(const Design& d, int part) {
  detail::check_part_index(d.structure(), part);
  if (d.structure().profile(part - 1) < 2) throw Error(ErrorKind::ProfileBelowTwo, "copied part needs k_i >= 2");
  detail::require_strength_at_most_two(d, "expand_equivalent");
  std::vector<int> v = d.structure().sizes(), k = d.structure().profile();
  v.push_back(v[static_cast<std::size_t>(part - 1)]);
  k.push_back(k[static_cast<std::size_t>(part - 1)]);
  std::vector<Block> blocks;
  for (const Block& b : d.blocks()) {
    auto ps = b.parts();
    ps.push_back(b.part(part - 1));
    blocks.emplace_back(std::move(ps));
  }
  return Design(PartStructure(std::move(v), std::move(k)), d.strength(), d.lambda(), std::move(blocks));
}

struct EquivalenceReduction {
  PartStructure reduced;
  // multiplicity[r]: how many original parts reduced part r stands for
  std::vector<int> multiplicity;
  // representative[j]: 1-based reduced part standing for original part j
  std::vector<int> representative;
};

// Keeps one part per (v_i, k_i) class among parts with k_i >= 2; parts with
// k_i = 1 are never merged.
inline EquivalenceReduction reduce_equivalence(const PartStructure& s) {
  std::vector<int> v, k, mult, rep;
  std::map<std::pair<int, int>, int> first;
  for (int i = 0; i < s.parts(); ++i) {
    const std::pair<int, int> key{s.size(i), s.profile(i)};
    if (s.profile(i) >= 2) {
      if (auto it = first.find(key); it != first.end()) {
        ++mult[static_cast<std::size_t>(it->second - 1)];
        rep.push_back(it->second);
        continue;
      }
      first[key] = static_cast<int>(v.size()) + 1;
    }
    v.push_back(key.first);
    k.push_back(key.second);
    mult.push_back(1);
    rep.push_back(static_cast<int>(v.size()));
  }
  return {PartStructure(std::move(v), std::move(k)), std::move(mult), std::move(rep)};
}

// Inverse of reduce_equivalence on designs: copies each representative part
// back into every original position.
inline Design expand_reduced(const Design& reduced, const EquivalenceReduction& r, const PartStructure& original) {
  if (!(reduced.structure() == r.reduced)) throw Error(ErrorKind::StructureMismatch, "design is not over the reduced structure");
  detail::require_strength_at_most_two(reduced, "expand_reduced");
  std::vector<Block> blocks;
  for (const Block& b : reduced.blocks()) {
    std::vector<PointSet> ps;
    for (int rep : r.representative) ps.push_back(b.part(rep - 1));
    blocks.emplace_back(std::move(ps));
  }
  return Design(original, reduced.strength(), reduced.lambda(), std::move(blocks));
}

// Shrinks part i to its first target[i] points; each deleted label in a block
// is replaced by the least surviving label not already there. Repeated blocks
// are removed.
inline Design delete_points(const Design& d, const std::vector<int>& target) {
  const PartStructure& s = d.structure();
  if (static_cast<int>(target.size()) != s.parts()) throw Error(ErrorKind::LengthMismatch, "target has the wrong length");
  for (int i = 0; i < s.parts(); ++i) {
    if (target[static_cast<std::size_t>(i)] < s.profile(i))
      throw Error(ErrorKind::TargetBelowProfile, "part " + std::to_string(i + 1) + " would drop below k_i points");
    if (target[static_cast<std::size_t>(i)] > s.size(i))
      throw Error(ErrorKind::TargetExceedsPart, "part " + std::to_string(i + 1) + " cannot grow by deletion");
  }
  detail::require_lambda_one(d, "delete_points");
  detail::require_strength_at_most_two(d, "delete_points");
  std::vector<Block> blocks;
  for (const Block& b : d.blocks()) {
    std::vector<PointSet> ps;
    for (int i = 0; i < s.parts(); ++i) {
      const int n = target[static_cast<std::size_t>(i)];
      PointSet p;
      for (int x : b.part(i))
        if (x <= n) p.push_back(x);
      detail::fill_least(p, s.profile(i) - static_cast<int>(p.size()), n);
      ps.push_back(std::move(p));
    }
    blocks.emplace_back(std::move(ps));
  }
  return deduplicate(Design(PartStructure(target, s.profile()), d.strength(), d.lambda(), std::move(blocks)));
}

// Grows every block to profile target, adding the least unused labels.
inline Design expand_blocks(const Design& d, const std::vector<int>& target) {
  const PartStructure& s = d.structure();
  if (static_cast<int>(target.size()) != s.parts()) throw Error(ErrorKind::LengthMismatch, "target has the wrong length");
  if (s.k_min() < 2) throw Error(ErrorKind::ProfileBelowTwo, "block expansion needs every k_i >= 2");
  for (int i = 0; i < s.parts(); ++i) {
    if (target[static_cast<std::size_t>(i)] > s.size(i))
      throw Error(ErrorKind::TargetExceedsPart, "part " + std::to_string(i + 1) + " is smaller than the target");
    if (target[static_cast<std::size_t>(i)] < s.profile(i))
      throw Error(ErrorKind::TargetBelowProfile, "part " + std::to_string(i + 1) + " cannot shrink by expansion");
  }
  detail::require_lambda_one(d, "expand_blocks");
  detail::require_strength_at_most_two(d, "expand_blocks");
  std::vector<Block> blocks;
  for (const Block& b : d.blocks()) {
    std::vector<PointSet> ps;
    for (int i = 0; i < s.parts(); ++i) {
      PointSet p = b.part(i);
      detail::fill_least(p, target[static_cast<std::size_t>(i)] - s.profile(i), s.size(i));
      ps.push_back(std::move(p));
    }
    blocks.emplace_back(std::move(ps));
  }
  return deduplicate(Design(PartStructure(s.sizes(), target), d.strength(), d.lambda(), std::move(blocks)));
}

// Merges parts i and j (1-based) into one part at position i: part i keeps
// labels 1..v_i and part j is shifted to v_i+1..v_i+v_j.
inline Design amalgamate(const Design& d, int i, int j) {
  const PartStructure& s = d.structure();
  detail::check_part_index(s, i);
  detail::check_part_index(s, j);
  if (i == j) throw Error(ErrorKind::InvalidInput, "cannot amalgamate a part with itself");
  if (s.profile(i - 1) < 2 || s.profile(j - 1) < 2)
    throw Error(ErrorKind::ProfileBelowTwo, "amalgamated parts need k_i >= 2");
  detail::require_strength_at_most_two(d, "amalgamate");
  const int offset = s.size(i - 1);
  std::vector<int> v, k;
  for (int p = 1; p <= s.parts(); ++p) {
    if (p == j) continue;
    v.push_back(p == i ? s.size(i - 1) + s.size(j - 1) : s.size(p - 1));
    k.push_back(p == i ? s.profile(i - 1) + s.profile(j - 1) : s.profile(p - 1));
  }
  std::vector<Block> blocks;
  for (const Block& b : d.blocks()) {
    std::vector<PointSet> ps;
    for (int p = 1; p <= s.parts(); ++p) {
      if (p == j) continue;
      PointSet part = b.part(p - 1);
      if (p == i)
        for (int x : b.part(j - 1)) part.push_back(x + offset);
      ps.push_back(std::move(part));
    }
    blocks.emplace_back(std::move(ps));
  }
  return Design(PartStructure(std::move(v), std::move(k)), d.strength(), d.lambda(), std::move(blocks));
}

// Removes repeated blocks (at lambda = 1), then walks the blocks from
// lexicographically largest down, dropping each whose removal keeps the design valid.
inline Design prune_redundant(const Design& d) {
  if (!is_valid(d)) throw Error(ErrorKind::InvalidInput, "prune_redundant needs a valid design");
  const Design start = d.lambda() == 1 ? deduplicate(d) : d;
  CoverageIndex index(start.structure(), start.strength());
  std::vector<std::uint32_t> count(static_cast<std::size_t>(index.size()), 0);
  for (const Block& b : start.blocks())
    index.for_each_in_block(b, [&](std::uint64_t id) { ++count[static_cast<std::size_t>(id)]; });

  const auto lambda = static_cast<std::uint32_t>(start.lambda());
  std::vector<char> keep(start.blocks().size(), 1);
  // output keeps input order
  std::vector<std::size_t> order(start.blocks().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return start.blocks()[b] < start.blocks()[a]; });
  for (std::size_t n : order) {
    bool removable = true;
    index.for_each_in_block(start.blocks()[n], [&](std::uint64_t id) {
      if (count[static_cast<std::size_t>(id)] <= lambda) removable = false;
    });
    if (!removable) continue;
    keep[n] = 0;
    index.for_each_in_block(start.blocks()[n], [&](std::uint64_t id) { --count[static_cast<std::size_t>(id)]; });
  }
  std::vector<Block> blocks;
  for (std::size_t n = 0; n < keep.size(); ++n)
    if (keep[n]) blocks.push_back(start.blocks()[n]);
  return Design(start.structure(), start.strength(), start.lambda(), std::move(blocks));
}

}  // namespace gencov
