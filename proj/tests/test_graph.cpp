#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace gencov;

TEST(Graph, JoinGraphShape) {
  const Graph g = join_graph(make_structure({4, 2, 2}, {2, 1, 1}));
  EXPECT_EQ(g.n, 8);
  EXPECT_EQ(g.edge_count(), 26u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(5, 6));
  EXPECT_TRUE(g.has_edge(5, 7));
  EXPECT_EQ(g.part_of[4], 2);
  EXPECT_EQ(g.local_label[4], 1);

  EXPECT_EQ(join_graph(make_structure({3, 4}, {2, 2})).edge_count(), 21u);
  EXPECT_EQ(join_graph(make_structure({2, 2, 2}, {1, 1, 1})).edge_count(), 12u);
}

TEST(Graph, EdgeCountClosedForms) {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = oracle::random_structure(rng, 4, 6);
    auto pairs = [](std::int64_t n) { return n * (n - 1) / 2; };
    std::int64_t within = 0, between = 0;
    for (int i = 0; i < s.parts(); ++i) {
      if (s.profile(i) >= 2) within += pairs(s.size(i));
      for (int j = i + 1; j < s.parts(); ++j) between += static_cast<std::int64_t>(s.size(i)) * s.size(j);
    }
    std::int64_t unit = 0;
    for (int i = 0; i < s.parts(); ++i)
      if (s.profile(i) == 1) unit += pairs(s.size(i));
    const auto e = static_cast<std::int64_t>(join_graph(s).edge_count());
    EXPECT_EQ(e, within + between);
    EXPECT_EQ(e, pairs(s.v_sum()) - unit);
  }
}

TEST(Graph, ExampleCovers) {
  const Design d = fixtures::gc_422();
  EXPECT_TRUE(check_clique_cover(d.structure(), d));
  EXPECT_TRUE(check_multipartite_cover(d.structure(), d));
  const Design missing(d.structure(), 2, 1, std::vector<Block>(d.blocks().begin() + 1, d.blocks().end()));
  EXPECT_FALSE(check_clique_cover(d.structure(), missing));
  EXPECT_FALSE(check_multipartite_cover(d.structure(), missing));
  const Design full(make_structure({2, 3}, {2, 3}), 2, 1, {Block({{1, 2}, {1, 2, 3}})});
  EXPECT_TRUE(check_clique_cover(full.structure(), full));
}

TEST(Graph, WithinPartConditionMatters) {
  // Every between-part pair is covered but the pair {2,3} of part 1 is not.
  const auto s = make_structure({3, 1}, {2, 1});
  const Design d(s, 2, 1, {Block({{1, 2}, {1}}), Block({{1, 3}, {1}})});
  EXPECT_FALSE(check_multipartite_cover(s, d));
  EXPECT_FALSE(check_clique_cover(s, d));
  EXPECT_FALSE(is_valid(d));
}

TEST(Graph, Errors) {
  const Design one = strength_one_cover(make_structure({3}, {2}));
  EXPECT_THROW(check_clique_cover(one.structure(), one), Error);
  EXPECT_THROW(check_multipartite_cover(make_structure({3}, {1}), fixtures::fano()), Error);
}

TEST(Graph, AgreesWithVerify) {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = oracle::random_structure(rng, 4, 4);
    if (s.k_sum() < 2) continue;
    std::vector<Block> blocks;
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int b = 0; b < n; ++b) blocks.push_back(oracle::random_block(rng, s));
    const Design d(s, 2, 1, blocks);
    const bool v = is_valid(d);
    EXPECT_EQ(check_clique_cover(s, d), v);
    EXPECT_EQ(check_multipartite_cover(s, d), v);
  }
}

TEST(Graph, Dot) {
  const std::string dot = to_dot(join_graph(make_structure({2, 1}, {1, 1})));
  EXPECT_NE(dot.find("subgraph cluster_1"), std::string::npos);
  EXPECT_NE(dot.find("v1 -- v3;"), std::string::npos);
  EXPECT_EQ(dot.find("v1 -- v2;"), std::string::npos);
}
