#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace gencov;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Structure, RejectsMalformedInput) {
  EXPECT_EQ(kind_of([] { PartStructure({4, 2}, {2}); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([] { PartStructure({}, {}); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([] { PartStructure({4, 0}, {2, 1}); }), ErrorKind::NonPositiveEntry);
  EXPECT_EQ(kind_of([] { PartStructure({4, 2}, {2, 0}); }), ErrorKind::NonPositiveEntry);
  EXPECT_EQ(kind_of([] { PartStructure({2}, {3}); }), ErrorKind::ProfileExceedsPart);
}

TEST(Structure, Aggregates) {
  PartStructure s({4, 2, 2}, {2, 1, 1});
  EXPECT_EQ(s.v_sum(), 8);
  EXPECT_EQ(s.k_sum(), 4);
  EXPECT_EQ(s.v_max(), 4);
  EXPECT_EQ(s.k_min(), 1);
  EXPECT_FALSE(s.unit_profile());
  EXPECT_EQ(s.candidate_blocks(), 6u * 2u * 2u);
  EXPECT_TRUE(PartStructure({2, 3}, {1, 1}).unit_profile());
}

TEST(Design, RejectsBadBlocksAndStrength) {
  const auto s = make_structure({4, 2}, {2, 1});
  EXPECT_EQ(kind_of([&] { Design(s, 4, 1, {}); }), ErrorKind::StrengthTooLarge);
  EXPECT_EQ(kind_of([&] { Design(s, 2, 0, {}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { Design(s, 2, 1, {Block({{1, 5}, {1}})}); }), ErrorKind::InvalidBlock);
  EXPECT_EQ(kind_of([&] { Design(s, 2, 1, {Block({{1, 1}, {1}})}); }), ErrorKind::InvalidBlock);
  EXPECT_EQ(kind_of([&] { Design(s, 2, 1, {Block({{1, 2, 3}, {1}})}); }), ErrorKind::InvalidBlock);
  EXPECT_EQ(kind_of([&] { Design(s, 2, 1, {Block({{1, 2}})}); }), ErrorKind::InvalidBlock);
}

TEST(Patterns, DescendingLexicographicOrder) {
  const auto p = admissible_patterns(make_structure({4, 2, 2}, {2, 1, 1}), 2);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0].weights, (std::vector<int>{2, 0, 0}));
  EXPECT_EQ(p[1].weights, (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(p[2].weights, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(p[3].weights, (std::vector<int>{0, 1, 1}));
}

TEST(Patterns, UnitProfileGivesColumnChoices) {
  // k = 1^m: one pattern per t-subset of the columns
  const auto p = admissible_patterns(make_structure({2, 2, 2, 2}, {1, 1, 1, 1}), 2);
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(admissible_patterns(make_structure({2, 2}, {1, 1}), 0).size(), 1u);
  EXPECT_THROW(admissible_patterns(make_structure({2, 2}, {1, 1}), 3), Error);
}

TEST(Patterns, MatchOracleTupleCount) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = oracle::random_structure(rng, 4, 5);
    for (int t = 0; t <= std::min(s.k_sum(), 3); ++t) {
      std::uint64_t total = 0;
      for (const auto& p : admissible_patterns(s, t)) {
        EXPECT_EQ(p.strength(), t);
        std::uint64_t n = 0;
        SetTuple tup;
        auto it = admissible_tuples(s, p);
        while (it.next(tup)) ++n;
        EXPECT_EQ(n, tuple_count(s, p));
        total += n;
      }
      EXPECT_EQ(total, oracle::tuples(s, t).size());
    }
  }
}

TEST(Tuples, LexicographicWithinPattern) {
  const auto s = make_structure({3, 2}, {2, 1});
  auto it = admissible_tuples(s, Pattern{{1, 1}});
  std::vector<SetTuple> seen;
  SetTuple t;
  while (it.next(t)) seen.push_back(t);
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen.front().parts, (std::vector<PointSet>{{1}, {1}}));
  EXPECT_EQ(seen[1].parts, (std::vector<PointSet>{{1}, {2}}));
}

TEST(Tuples, Containment) {
  const Block b({{1, 2}, {1}, {1}});
  EXPECT_TRUE(tuple_in_block(SetTuple{{{1, 2}, {}, {}}}, b));
  EXPECT_TRUE(tuple_in_block(SetTuple{{{2}, {1}, {}}}, b));
  EXPECT_FALSE(tuple_in_block(SetTuple{{{3}, {1}, {}}}, b));
  EXPECT_THROW(tuple_in_block(SetTuple{{{1}}}, b), Error);
}

TEST(CoveringArray, RoundTripAndErrors) {
  const Design d = fixtures::array_5_4_2();
  EXPECT_EQ(d.structure(), make_structure({2, 2, 2, 2}, {1, 1, 1, 1}));
  auto rows = to_covering_array(d);
  EXPECT_EQ(from_covering_array(rows, {2, 2, 2, 2}, 2), d);
  EXPECT_EQ(rows[1], (std::vector<int>{2, 2, 2, 1}));
  EXPECT_EQ(kind_of([] { from_covering_array({{1, 3}}, {2, 2}, 2); }), ErrorKind::EntryOutOfAlphabet);
  EXPECT_EQ(kind_of([] { from_covering_array({{1}}, {2, 2}, 2); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([] { to_covering_array(fixtures::gc_422()); }), ErrorKind::NotUnitProfile);
}

TEST(Design, DeduplicateKeepsFirstOccurrences) {
  const auto s = make_structure({3}, {2});
  const Design d(s, 2, 1, {Block({{1, 2}}), Block({{2, 3}}), Block({{1, 2}}), Block({{1, 3}})});
  const Design e = deduplicate(d);
  ASSERT_EQ(e.size(), 3);
  EXPECT_EQ(e.blocks()[2], Block({{1, 3}}));
}

TEST(Combinatorics, RankMatchesEnumerationOrder) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto all = all_combinations(n, k);
      ASSERT_EQ(all.size(), binomial(n, k));
      for (std::size_t r = 0; r < all.size(); ++r) EXPECT_EQ(combination_rank(all[r], n), r);
    }
  EXPECT_EQ(binomial(100, 3), 161700u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(200, 100), kSaturated);
}

TEST(Strings, Formatting) {
  EXPECT_EQ(to_string(SetTuple{{{1, 2}, {}, {}}}), "({1,2}, {}, {})");
  EXPECT_EQ(join_ints({4, 2, 2}), "4,2,2");
  EXPECT_EQ(join_ints({4, 2}, ' '), "4 2");
  EXPECT_EQ(to_string(ErrorKind::StrengthTooLarge), "StrengthTooLarge");
}
