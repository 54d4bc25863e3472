#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace gencov;

TEST(Product, ConcatCountsAndValidity) {
  const Design p = product_concat(fixtures::gc_57(), fixtures::gc_34());
  EXPECT_EQ(p.size(), 60);
  EXPECT_EQ(p.structure(), make_structure({5, 7, 3, 4}, {2, 3, 2, 2}));
  EXPECT_TRUE(is_valid(p));
  // Row-major: block 7 pairs B_2 with C_1.
  EXPECT_EQ(p.blocks()[6], Block({{3, 4}, {1, 4, 7}, {1, 2}, {1, 2}}));

  const Design one(make_structure({2, 3}, {2, 3}), 2, 1, {Block({{1, 2}, {1, 2, 3}})});
  const Design q = product_concat(fixtures::gc_422(), one);
  EXPECT_EQ(q, add_full_parts(fixtures::gc_422(), {2, 3}));
  EXPECT_EQ(product_concat(one, one).size(), 1);
  EXPECT_THROW(product_concat(fixtures::gc_422(), strength_one_cover(fixtures::gc_34().structure())), Error);
}

TEST(Product, ConcatImprovedMatchesExample) {
  const Design p = product_concat_improved(fixtures::gc_57(), fixtures::gc_34());
  EXPECT_EQ(p.size(), 16);
  EXPECT_EQ(p.blocks(), fixtures::concat_improved_blocks());
  EXPECT_EQ(p.blocks()[0], p.blocks()[10]);
  EXPECT_TRUE(is_valid(p));
}

TEST(Product, ConcatImprovedSizeFormula) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s1 = oracle::random_structure(rng, 2, 4);
    const auto s2 = oracle::random_structure(rng, 2, 4);
    if (s1.k_sum() < 2 || s2.k_sum() < 2) continue;
    const Design d1 = oracle::random_valid_design(rng, s1, 2);
    const Design d2 = oracle::random_valid_design(rng, s2, 2);
    const Design p = product_concat_improved(d1, d2);
    const auto e = lower_t1(s1) * lower_t1(s2);
    EXPECT_EQ(p.size(), std::max(d1.size(), d2.size()) + e);
    EXPECT_TRUE(is_valid(p));
  }
}

TEST(Product, ConcatImprovedStrengthOneAndThree) {
  const auto s1 = make_structure({4, 3}, {2, 1});
  const auto s2 = make_structure({3}, {2});
  const Design a = strength_one_cover(s1), b = strength_one_cover(s2);
  const Design p = product_concat_improved(a, b);
  EXPECT_EQ(p.size(), std::max(a.size(), b.size()));
  EXPECT_TRUE(is_valid(p));

  const Design a3 = greedy_cover(s1, 3), b3 = greedy_cover(make_structure({4}, {3}), 3);
  EXPECT_THROW(product_concat_improved(a3, b3), Error);
  const Design q = product_concat_improved(a3, b3, greedy_cover(s1, 2), greedy_cover(make_structure({4}, {3}), 2));
  EXPECT_TRUE(is_valid(q));
  EXPECT_THROW(product_concat_improved(a3, b3, greedy_cover(s1, 1), greedy_cover(make_structure({4}, {3}), 2)), Error);
}

TEST(Product, ConcatImprovedStrengthThreeRandom) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s1 = oracle::random_structure(rng, 2, 4), s2 = oracle::random_structure(rng, 2, 4);
    if (s1.k_sum() < 3 || s2.k_sum() < 3) continue;
    const Design p = product_concat_improved(greedy_cover(s1, 3), greedy_cover(s2, 3), greedy_cover(s1, 2),
                                             greedy_cover(s2, 2));
    EXPECT_TRUE(oracle::valid(p));
  }
}

TEST(Product, SetLift) {
  EXPECT_EQ(set_lift({1, 2}, {1, 2}, 3), (PointSet{1, 2, 4, 5}));
  EXPECT_EQ(set_lift({1, 2, 3}, {1, 2, 4}, 4), (PointSet{1, 2, 3, 5, 6, 7, 13, 14, 15}));
  EXPECT_EQ(set_lift({1}, {1}, 9), (PointSet{1}));
  EXPECT_THROW(set_lift({4}, {1}, 3), Error);
  EXPECT_THROW(set_lift({1}, {0}, 3), Error);
  EXPECT_EQ(one_based_residue(6, 3), 3);
  EXPECT_EQ(one_based_residue(7, 3), 1);
  EXPECT_EQ(one_based_quotient(6, 3), 2);
  EXPECT_EQ(one_based_quotient(7, 3), 3);
  const auto [r, s] = set_unlift(set_lift({1, 3}, {2, 4}, 3), 3);
  EXPECT_EQ(r, (PointSet{1, 3}));
  EXPECT_EQ(s, (PointSet{2, 4}));
}

TEST(Product, HadamardMatchesExample) {
  const Design h = product_hadamard(fixtures::gc_34_23(), fixtures::gc_34_23());
  EXPECT_EQ(h.structure(), make_structure({9, 16}, {4, 9}));
  EXPECT_EQ(h.blocks(), fixtures::hadamard_blocks());
  EXPECT_TRUE(is_valid(h));
}

TEST(Product, HadamardIdentityAndErrors) {
  const Design unit(make_structure({1, 1}, {1, 1}), 2, 1, {Block({{1}, {1}})});
  EXPECT_EQ(product_hadamard(fixtures::gc_34(), unit), fixtures::gc_34());
  EXPECT_THROW(product_hadamard(fixtures::gc_34(), fixtures::fano()), Error);
  try {
    product_hadamard(fixtures::gc_34(), fixtures::gc_422());
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PartCountMismatch);
  }
  // unit profile on a part with several points leaves lifted pairs uncovered
  const Design pairs(make_structure({3, 2}, {1, 2}), 2, 1,
                     {Block({{1}, {1, 2}}), Block({{2}, {1, 2}}), Block({{3}, {1, 2}})});
  const Design whole(make_structure({3, 1}, {3, 1}), 2, 1, {Block({{1, 2, 3}, {1}})});
  try {
    product_hadamard(pairs, whole);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ProfileBelowTwo);
  }
}

TEST(Product, HadamardRandomValidity) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 2)(rng);
    auto pick = [&] {
      while (true) {
        const auto s = oracle::random_structure(rng, m, 3);
        bool split = true;
        for (int i = 0; i < s.parts(); ++i) split = split && (s.profile(i) >= 2 || s.size(i) == 1);
        if (s.parts() == m && s.k_sum() >= 2 && split) return s;
      }
    };
    const auto s1 = pick(), s2 = pick();
    const Design d1 = oracle::random_valid_design(rng, s1, 2), d2 = oracle::random_valid_design(rng, s2, 2);
    const Design h = product_hadamard(d1, d2);
    EXPECT_EQ(h.size(), d1.size() * d2.size());
    EXPECT_TRUE(oracle::valid(h)) << emit_design(d1) << emit_design(d2);
  }
}

TEST(Product, ModularDecompositionRoundTrip) {
  // Every covered pair of the product decomposes into covered pairs of the factors.
  const Design a = fixtures::gc_34_23();
  const Design h = product_hadamard(a, a);
  for (const Block& b : h.blocks())
    for (int i = 0; i < 2; ++i) {
      const auto [r, s] = set_unlift(b.part(i), a.structure().size(i));
      bool found = false;
      for (const Block& x : a.blocks())
        for (const Block& y : a.blocks()) found = found || (x.part(i) == r && y.part(i) == s);
      EXPECT_TRUE(found);
    }
}
