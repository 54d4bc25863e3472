#pragma once

#include <initializer_list>
#include <vector>

#include "gencov/gencov.hpp"

// Designs printed in the source examples, entered by hand.
namespace fixtures {

using gencov::Block;
using gencov::Design;
using gencov::PointSet;
using gencov::make_structure;

inline std::vector<Block> rows(std::initializer_list<std::vector<PointSet>> list) {
  std::vector<Block> out;
  for (const auto& parts : list) out.emplace_back(parts);
  return out;
}

// (8,5,2)-covering design with 4 blocks.
inline Design cover_8_5_2() {
  return Design(make_structure({8}, {5}), 2, 1,
                rows({{{1, 2, 3, 4, 5}}, {{1, 5, 6, 7, 8}}, {{2, 3, 6, 7, 8}}, {{4, 5, 6, 7, 8}}}));
}

// CA(5;4,2,2) over {0,1}.
inline gencov::ArrayRows array_5_4_2_raw() {
  return {{0, 0, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}};
}

inline Design array_5_4_2() {
  auto raw = array_5_4_2_raw();
  for (auto& r : raw)
    for (auto& x : r) x += 1;
  return gencov::from_covering_array(raw, {2, 2, 2, 2}, 2);
}

// GC((4,2,2),(2,1,1),2) with 6 blocks.
inline Design gc_422() {
  return Design(make_structure({4, 2, 2}, {2, 1, 1}), 2, 1,
                rows({{{1, 2}, {1}, {1}},
                      {{1, 3}, {1}, {2}},
                      {{1, 4}, {2}, {1}},
                      {{2, 3}, {2}, {2}},
                      {{2, 4}, {1}, {2}},
                      {{3, 4}, {2}, {1}}}));
}

inline Design fano() {
  return Design(make_structure({7}, {3}), 2, 1,
                rows({{{1, 2, 4}}, {{2, 3, 5}}, {{3, 4, 6}}, {{4, 5, 7}}, {{1, 5, 6}}, {{2, 6, 7}}, {{1, 3, 7}}}));
}

// GC((5,6,7),(3,4,3),2) obtained from the Fano plane by least-point filling.
inline Design gc_567() {
  return Design(make_structure({5, 6, 7}, {3, 4, 3}), 2, 1,
                rows({{{1, 2, 4}, {1, 2, 3, 4}, {1, 2, 4}},
                      {{2, 3, 5}, {1, 2, 3, 5}, {2, 3, 5}},
                      {{1, 3, 4}, {1, 3, 4, 6}, {3, 4, 6}},
                      {{1, 4, 5}, {1, 2, 4, 5}, {4, 5, 7}},
                      {{1, 2, 5}, {1, 2, 5, 6}, {1, 5, 6}},
                      {{1, 2, 3}, {1, 2, 3, 6}, {2, 6, 7}},
                      {{1, 2, 3}, {1, 2, 3, 4}, {1, 3, 7}}}));
}

// GC((5,7),(2,3),2) with 10 blocks.
inline Design gc_57() {
  return Design(make_structure({5, 7}, {2, 3}), 2, 1,
                rows({{{1, 2}, {1, 2, 3}},
                      {{3, 4}, {1, 4, 7}},
                      {{1, 5}, {1, 5, 6}},
                      {{4, 5}, {2, 4, 6}},
                      {{2, 3}, {2, 5, 7}},
                      {{2, 4}, {3, 4, 5}},
                      {{3, 5}, {3, 6, 7}},
                      {{1, 4}, {1, 2, 4}},
                      {{1, 3}, {1, 2, 7}},
                      {{2, 5}, {1, 2, 6}}}));
}

// GC((3,4),(2,2),2) with 6 blocks.
inline Design gc_34() {
  return Design(make_structure({3, 4}, {2, 2}), 2, 1,
                rows({{{1, 2}, {1, 2}},
                      {{1, 3}, {1, 3}},
                      {{1, 2}, {1, 4}},
                      {{2, 3}, {2, 3}},
                      {{2, 3}, {2, 4}},
                      {{1, 3}, {3, 4}}}));
}

// The 16 blocks built from gc_57 and gc_34 by the two-stage product.
inline std::vector<Block> concat_improved_blocks() {
  return rows({{{1, 2}, {1, 2, 3}, {1, 2}, {1, 2}},
               {{3, 4}, {1, 4, 7}, {1, 3}, {1, 3}},
               {{1, 5}, {1, 5, 6}, {1, 2}, {1, 4}},
               {{4, 5}, {2, 4, 6}, {2, 3}, {2, 3}},
               {{2, 3}, {2, 5, 7}, {2, 3}, {2, 4}},
               {{2, 4}, {3, 4, 5}, {1, 3}, {3, 4}},
               {{3, 5}, {3, 6, 7}, {1, 2}, {1, 2}},
               {{1, 4}, {1, 2, 4}, {1, 2}, {1, 2}},
               {{1, 3}, {1, 2, 7}, {1, 2}, {1, 2}},
               {{2, 5}, {1, 2, 6}, {1, 2}, {1, 2}},
               {{1, 2}, {1, 2, 3}, {1, 2}, {1, 2}},
               {{3, 4}, {4, 5, 6}, {1, 2}, {1, 2}},
               {{1, 5}, {1, 2, 7}, {1, 2}, {1, 2}},
               {{1, 2}, {1, 2, 3}, {1, 3}, {3, 4}},
               {{3, 4}, {4, 5, 6}, {1, 3}, {3, 4}},
               {{1, 5}, {1, 2, 7}, {1, 3}, {3, 4}}});
}

// GC((3,4),(2,3),2) with 3 blocks.
inline Design gc_34_23() {
  return Design(make_structure({3, 4}, {2, 3}), 2, 1,
                rows({{{1, 2}, {1, 2, 3}}, {{1, 3}, {1, 2, 4}}, {{2, 3}, {1, 3, 4}}}));
}

// Its Hadamard square, GC((9,16),(4,9),2).
inline std::vector<Block> hadamard_blocks() {
  return rows({{{1, 2, 4, 5}, {1, 2, 3, 5, 6, 7, 9, 10, 11}},
               {{1, 2, 7, 8}, {1, 2, 3, 5, 6, 7, 13, 14, 15}},
               {{4, 5, 7, 8}, {1, 2, 3, 9, 10, 11, 13, 14, 15}},
               {{1, 3, 4, 6}, {1, 2, 4, 5, 6, 8, 9, 10, 12}},
               {{1, 3, 7, 9}, {1, 2, 4, 5, 6, 8, 13, 14, 16}},
               {{4, 6, 7, 9}, {1, 2, 4, 9, 10, 12, 13, 14, 16}},
               {{2, 3, 5, 6}, {1, 3, 4, 5, 7, 8, 9, 11, 12}},
               {{2, 3, 8, 9}, {1, 3, 4, 5, 7, 8, 13, 15, 16}},
               {{5, 6, 8, 9}, {1, 3, 4, 9, 11, 12, 13, 15, 16}}});
}

// Every strength-2 fixture design.
inline std::vector<Design> strength_two() {
  return {cover_8_5_2(), array_5_4_2(), gc_422(), fano(), gc_567(), gc_57(), gc_34(), gc_34_23(),
          Design(make_structure({5, 7, 3, 4}, {2, 3, 2, 2}), 2, 1, concat_improved_blocks()),
          Design(make_structure({9, 16}, {4, 9}), 2, 1, hadamard_blocks())};
}

}  // namespace fixtures
