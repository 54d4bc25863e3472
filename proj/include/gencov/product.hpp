#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "gencov/construct.hpp"
#include "gencov/core.hpp"

namespace gencov {

namespace detail {

inline PartStructure concat_structure(const PartStructure& a, const PartStructure& b) {
  std::vector<int> v = a.sizes(), k = a.profile();
  v.insert(v.end(), b.sizes().begin(), b.sizes().end());
  k.insert(k.end(), b.profile().begin(), b.profile().end());
  return PartStructure(std::move(v), std::move(k));
}

inline Block concat_block(const Block& a, const Block& b) {
  auto parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Block(std::move(parts));
}

inline void require_lambda_one(const Design& a, const Design& b, const char* op) {
  require_lambda_one(a, op);
  require_lambda_one(b, op);
}

}  // namespace detail

// Every block of d1 concatenated with every block of d2, row-major.
inline Design product_concat(const Design& d1, const Design& d2) {
  if (d1.strength() != d2.strength()) throw Error(ErrorKind::StrengthMismatch, "designs have different strengths");
  detail::require_lambda_one(d1, d2, "product_concat");
  std::vector<Block> blocks;
  blocks.reserve(d1.blocks().size() * d2.blocks().size());
  for (const Block& a : d1.blocks())
    for (const Block& b : d2.blocks()) blocks.push_back(detail::concat_block(a, b));
  return Design(detail::concat_structure(d1.structure(), d2.structure()), d1.strength(), 1, std::move(blocks));
}

// Two-stage product. Stage 1 pairs the r-th blocks of d1 and d2 for
// r < max(b, c), reusing the first block of the shorter design. Stage 2 is the
// full product of the strength t-1 designs e1 and e2, e2 in the outer loop.
// At t = 2 missing e designs default to strength_one_cover. Repeated blocks are kept.
inline Design product_concat_improved(const Design& d1, const Design& d2, std::optional<Design> e1 = std::nullopt,
                                      std::optional<Design> e2 = std::nullopt) {
  const int t = d1.strength();
  if (d2.strength() != t) throw Error(ErrorKind::StrengthMismatch, "designs have different strengths");
  detail::require_lambda_one(d1, d2, "product_concat_improved");
  if (d1.blocks().empty() || d2.blocks().empty())
    throw Error(ErrorKind::InvalidInput, "product_concat_improved needs nonempty designs");
  if (t >= 2) {
    if (!e1 && t == 2) e1 = strength_one_cover(d1.structure());
    if (!e2 && t == 2) e2 = strength_one_cover(d2.structure());
    if (!e1 || !e2) throw Error(ErrorKind::InvalidInput, "strength t-1 designs are required for t >= 3");
    if (!(e1->structure() == d1.structure()) || !(e2->structure() == d2.structure()))
      throw Error(ErrorKind::StructureMismatch, "e designs must share the structures of d1 and d2");
    if (e1->strength() != t - 1 || e2->strength() != t - 1)
      throw Error(ErrorKind::StrengthMismatch, "e designs must have strength t-1");
  }

  const std::size_t b = d1.blocks().size(), c = d2.blocks().size();
  std::vector<Block> blocks;
  for (std::size_t r = 0; r < std::max(b, c); ++r)
    blocks.push_back(detail::concat_block(d1.blocks()[r < b ? r : 0], d2.blocks()[r < c ? r : 0]));
  if (t >= 2)
    for (const Block& y : e2->blocks())
      for (const Block& x : e1->blocks()) blocks.push_back(detail::concat_block(x, y));
  return Design(detail::concat_structure(d1.structure(), d2.structure()), t, 1, std::move(blocks));
}

// x mod v with values in 1..v.
inline int one_based_residue(int x, int v) { return (x - 1) % v + 1; }
// The s with x = r + (s-1)v for r in 1..v.
inline int one_based_quotient(int x, int v) { return (x - 1) / v + 1; }

// {r + (s-1)v : r in R, s in S}.
inline PointSet set_lift(const PointSet& r, const PointSet& s, int v) {
  PointSet out;
  for (int x : r)
    if (x < 1 || x > v) throw Error(ErrorKind::LabelOutOfRange, "label " + std::to_string(x) + " outside 1.." + std::to_string(v));
  for (int y : s) {
    if (y < 1) throw Error(ErrorKind::LabelOutOfRange, "label " + std::to_string(y) + " is not positive");
    for (int x : r) out.push_back(x + (y - 1) * v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Splits a lifted label set into its residues and quotients.
inline std::pair<PointSet, PointSet> set_unlift(const PointSet& lifted, int v) {
  PointSet r, s;
  for (int x : lifted) {
    r.push_back(one_based_residue(x, v));
    s.push_back(one_based_quotient(x, v));
  }
  for (auto* p : {&r, &s}) {
    std::sort(p->begin(), p->end());
    p->erase(std::unique(p->begin(), p->end()), p->end());
  }
  return {r, s};
}

// Partwise lifted product of two strength-2 designs with the same number of
// parts: structure (v_i w_i), (k_i l_i); blocks row-major over (B_i, C_j).
inline Design product_hadamard(const Design& d1, const Design& d2) {
  const PartStructure& s1 = d1.structure();
  const PartStructure& s2 = d2.structure();
  if (s1.parts() != s2.parts()) throw Error(ErrorKind::PartCountMismatch, "designs have different part counts");
  if (d1.strength() != 2 || d2.strength() != 2) throw Error(ErrorKind::StrengthNotTwo, "Hadamard product needs t = 2");
  detail::require_lambda_one(d1, d2, "product_hadamard");
  // a factor part with one point per block cannot split pairs of distinct lifted points
  for (int i = 0; i < s1.parts(); ++i) {
    if (s1.profile(i) * s2.profile(i) < 2) continue;
    if ((s1.profile(i) == 1 && s1.size(i) > 1) || (s2.profile(i) == 1 && s2.size(i) > 1))
      throw Error(ErrorKind::ProfileBelowTwo, "part " + std::to_string(i + 1) + " has k = 1 in one factor");
  }
  std::vector<int> v, k;
  for (int i = 0; i < s1.parts(); ++i) {
    v.push_back(s1.size(i) * s2.size(i));
    k.push_back(s1.profile(i) * s2.profile(i));
  }
  std::vector<Block> blocks;
  for (const Block& a : d1.blocks())
    for (const Block& b : d2.blocks()) {
      std::vector<PointSet> parts;
      for (int i = 0; i < s1.parts(); ++i) parts.push_back(set_lift(a.part(i), b.part(i), s1.size(i)));
      blocks.emplace_back(std::move(parts));
    }
  return Design(PartStructure(std::move(v), std::move(k)), 2, 1, std::move(blocks));
}

}  // namespace gencov
