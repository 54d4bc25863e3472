#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gencov/core.hpp"

namespace gencov {

// Simple undirected graph on vertices 1..n. Vertices are numbered part-major:
// part 1 holds 1..v_1, part 2 holds v_1+1..v_1+v_2, and so on.
struct Graph {
  int n = 0;
  std::vector<int> part_of;      // 1-based part, indexed by vertex - 1
  std::vector<int> local_label;  // label inside its part
  std::unordered_set<std::uint64_t> edges;

  static std::uint64_t key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }
  bool has_edge(int a, int b) const { return a != b && edges.count(key(a, b)) > 0; }
  std::size_t edge_count() const noexcept { return edges.size(); }
};

inline std::vector<int> part_offsets(const PartStructure& s) {
  std::vector<int> off(static_cast<std::size_t>(s.parts()), 0);
  for (int i = 1; i < s.parts(); ++i) off[static_cast<std::size_t>(i)] = off[static_cast<std::size_t>(i - 1)] + s.size(i - 1);
  return off;
}

// Join of the parts: part i is a clique when k_i >= 2 and independent when
// k_i = 1; every pair from different parts is adjacent.
inline Graph join_graph(const PartStructure& s) {
  Graph g;
  g.n = s.v_sum();
  for (int i = 0; i < s.parts(); ++i)
    for (int x = 1; x <= s.size(i); ++x) {
      g.part_of.push_back(i + 1);
      g.local_label.push_back(x);
    }
  for (int a = 1; a <= g.n; ++a)
    for (int b = a + 1; b <= g.n; ++b) {
      const int pa = g.part_of[static_cast<std::size_t>(a - 1)], pb = g.part_of[static_cast<std::size_t>(b - 1)];
      if (pa != pb || s.profile(pa - 1) >= 2) g.edges.insert(Graph::key(a, b));
    }
  return g;
}

namespace detail {

inline void require_graph_input(const PartStructure& s, const Design& d) {
  if (!(d.structure() == s)) throw Error(ErrorKind::StructureMismatch, "design is over a different structure");
  if (d.strength() != 2) throw Error(ErrorKind::StrengthNotTwo, "graph views need t = 2");
}

}  // namespace detail

// Reads each block as a clique of join_graph(s) and checks that every edge
// lies in at least lambda of them.
inline bool check_clique_cover(const PartStructure& s, const Design& d) {
  detail::require_graph_input(s, d);
  const Graph g = join_graph(s);
  const auto off = part_offsets(s);
  std::unordered_map<std::uint64_t, int> hits;
  for (const Block& b : d.blocks()) {
    std::vector<int> clique;
    for (int i = 0; i < s.parts(); ++i)
      for (int x : b.part(i)) clique.push_back(off[static_cast<std::size_t>(i)] + x);
    for (std::size_t p = 0; p < clique.size(); ++p)
      for (std::size_t q = p + 1; q < clique.size(); ++q) ++hits[Graph::key(clique[p], clique[q])];
  }
  for (auto e : g.edges) {
    auto it = hits.find(e);
    if (it == hits.end() || it->second < d.lambda()) return false;
  }
  return true;
}

// Reads each block as a copy of the complete multipartite graph K_k inside
// K_v. Checks (i) every edge of K_v is covered and (ii) for parts with
// k_i >= 2, every pair inside part i lies in some block's part-i set.
inline bool check_multipartite_cover(const PartStructure& s, const Design& d) {
  detail::require_graph_input(s, d);
  const int m = s.parts();
  // between[i][j] is a v_i x v_j count matrix for i < j
  std::vector<std::vector<std::vector<int>>> between(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> within(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    between[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m));
    for (int j = i + 1; j < m; ++j)
      between[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(s.size(i) * s.size(j)), 0);
    within[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(s.size(i) * s.size(i)), 0);
  }
  for (const Block& b : d.blocks())
    for (int i = 0; i < m; ++i) {
      const auto& pi = b.part(i);
      for (std::size_t p = 0; p < pi.size(); ++p)
        for (std::size_t q = p + 1; q < pi.size(); ++q)
          ++within[static_cast<std::size_t>(i)][static_cast<std::size_t>((pi[p] - 1) * s.size(i) + pi[q] - 1)];
      for (int j = i + 1; j < m; ++j)
        for (int x : pi)
          for (int y : b.part(j))
            ++between[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>((x - 1) * s.size(j) + y - 1)];
    }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int c : between[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        if (c < d.lambda()) return false;
  for (int i = 0; i < m; ++i) {
    if (s.profile(i) < 2) continue;
    for (int x = 1; x <= s.size(i); ++x)
      for (int y = x + 1; y <= s.size(i); ++y)
        if (within[static_cast<std::size_t>(i)][static_cast<std::size_t>((x - 1) * s.size(i) + y - 1)] < d.lambda()) return false;
  }
  return true;
}

// Graphviz rendering of join_graph(s), one cluster per part.
inline std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  int parts = 0;
  for (int p : g.part_of) parts = std::max(parts, p);
  for (int p = 1; p <= parts; ++p) {
    out << "  subgraph cluster_" << p << " {\n    label=\"X" << p << "\";\n";
    for (int a = 1; a <= g.n; ++a)
      if (g.part_of[static_cast<std::size_t>(a - 1)] == p)
        out << "    v" << a << " [label=\"" << g.local_label[static_cast<std::size_t>(a - 1)] << "\"];\n";
    out << "  }\n";
  }
  for (int a = 1; a <= g.n; ++a)
    for (int b = a + 1; b <= g.n; ++b)
      if (g.has_edge(a, b)) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace gencov
