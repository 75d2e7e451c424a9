#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "bpm/ordered.hpp"
#include "bpm/polyspace.hpp"

namespace bpm {
namespace {

using Pairs = std::vector<RepresentingSequence::Pair>;

BipartiteGraph graph(int n, std::initializer_list<Edge> one_based) {
  std::vector<Edge> edges;
  for (auto e : one_based) edges.push_back({e.row - 1, e.col - 1});
  return BipartiteGraph::from_edges(n, edges);
}

// Left neighbourhoods form a chain under inclusion for some ordering of rows.
bool brute_force_totally_ordered(const BipartiteGraph& g) {
  std::vector<int> p(static_cast<std::size_t>(g.n()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool chain = true;
    for (int i = 0; i + 1 < g.n() && chain; ++i) {
      const auto a = g.row(p[static_cast<std::size_t>(i)]);
      const auto b = g.row(p[static_cast<std::size_t>(i + 1)]);
      chain = (a & ~b) == 0;
    }
    if (chain) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

TEST(TotallyOrdered, Examples) {
  EXPECT_FALSE(is_totally_ordered(graph(2, {{1, 1}, {2, 2}})));
  EXPECT_TRUE(is_totally_ordered(BipartiteGraph(3)));
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s <= n; ++s)
      for (int t = 0; t <= n; ++t) {
        BipartiteGraph g(n);
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < t; ++j) g = g.with_edge(i, j);
        EXPECT_TRUE(is_totally_ordered(g));
      }
}

TEST(TotallyOrdered, AgreesWithPermutationSearch) {
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
      const auto g = BipartiteGraph::from_mask(n, m);
      ASSERT_EQ(is_totally_ordered(g), brute_force_totally_ordered(g)) << n << " " << m;
    }
}

TEST(CanonicalSort, Examples) {
  const auto a = canonical_sort(graph(2, {{2, 1}, {2, 2}}));
  EXPECT_EQ(a.sorted, graph(2, {{2, 1}, {2, 2}}));
  EXPECT_EQ(a.left, (std::vector<int>{0, 1}));
  EXPECT_EQ(a.right, (std::vector<int>{0, 1}));
  const auto b = canonical_sort(graph(2, {{1, 1}, {1, 2}}));
  EXPECT_EQ(b.sorted, a.sorted);
  EXPECT_EQ(b.left, (std::vector<int>{1, 0}));
  const auto k = canonical_sort(BipartiteGraph::complete(3));
  EXPECT_EQ(k.sorted, BipartiteGraph::complete(3));
  EXPECT_EQ(k.left, (std::vector<int>{0, 1, 2}));
}

TEST(CanonicalSort, PermutationsApplyToOriginal) {
  for (std::uint64_t m = 0; m < 512; ++m) {
    const auto g = BipartiteGraph::from_mask(3, m);
    if (!is_totally_ordered(g)) continue;
    const auto c = canonical_sort(g);
    EXPECT_TRUE(is_sorted_ordered(c.sorted));
    EXPECT_EQ(g.permuted(c.left, c.right), c.sorted);
  }
}

TEST(CanonicalSort, OrbitInvariant) {
  const int n = 3;
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (std::uint64_t m = 0; m < 512; ++m) {
    const auto g = BipartiteGraph::from_mask(n, m);
    if (!is_totally_ordered(g)) continue;
    const auto h = canonical_sort(g).sorted;
    for (const auto& l : perms)
      for (const auto& r : perms) ASSERT_EQ(canonical_sort(g.permuted(l, r)).sorted, h);
  }
}

TEST(RepresentingSequence, Examples) {
  // K_{s,t} inside K_{n,n}: s full rows adjacent to the first t columns.
  const int n = 4;
  for (int s = 1; s < n; ++s)
    for (int t = 1; t <= n; ++t) {
      BipartiteGraph g(n);
      for (int i = n - s; i < n; ++i)
        for (int j = 0; j < t; ++j) g = g.with_edge(i, j);
      EXPECT_EQ(representing_sequence(g), RepresentingSequence(n, Pairs{{0, n - s}, {t, n}}));
    }
  EXPECT_EQ(representing_sequence(BipartiteGraph::complete(3)), RepresentingSequence(3, Pairs{{3, 3}}));
  EXPECT_EQ(representing_sequence(BipartiteGraph(3)), RepresentingSequence(3, Pairs{{0, 3}}));
  const Block b(5, 2, 3);
  EXPECT_EQ(representing_sequence(b.sequence().decode()), RepresentingSequence(5, Pairs{{2, 3}, {5, 5}}));
}

TEST(RepresentingSequence, RejectsInvalid) {
  EXPECT_THROW(RepresentingSequence(2, Pairs{}), Error);
  EXPECT_THROW(RepresentingSequence(2, Pairs{{1, 1}, {1, 2}}), Error);
  EXPECT_THROW(RepresentingSequence(2, Pairs{{0, 1}}), Error);
  EXPECT_THROW(RepresentingSequence(2, Pairs{{3, 2}}), Error);
  EXPECT_THROW(representing_sequence(graph(2, {{1, 1}, {2, 2}})), Error);
}

TEST(RepresentingSequence, RoundTripAllSortedGraphs) {
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
      const auto g = BipartiteGraph::from_mask(n, m);
      if (!is_sorted_ordered(g)) continue;
      ASSERT_EQ(representing_sequence(g).decode(), g) << n << " " << m;
    }
}

TEST(RepresentingSequence, TextForm) {
  const RepresentingSequence s(8, Pairs{{2, 2}, {5, 5}, {8, 8}});
  EXPECT_EQ(format_sequence(s), "8; (2,2)(5,5)(8,8)");
  EXPECT_EQ(parse_sequence("8; (2,2)(5,5)(8,8)"), s);
  EXPECT_THROW(parse_sequence("8; (2,2)(5,5"), Error);
  EXPECT_THROW(parse_sequence("2; (2,1)(1,2)"), Error);
}

TEST(PermittedEdges, Examples) {
  const int n = 5;
  for (int d = 0; d < n; ++d)
    for (int k = 1; k < n; ++k) {
      std::vector<Edge> expect;
      for (int i = 0; i < k; ++i)
        for (int j = d; j < n; ++j) expect.push_back({i, j});
      auto got = permitted_edges(Block(n, d, k).sequence());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expect) << d << " " << k;
    }
  EXPECT_TRUE(permitted_edges(RepresentingSequence(3, Pairs{{3, 3}})).empty());
  EXPECT_EQ(permitted_edges(RepresentingSequence(3, Pairs{{0, 3}})).size(), 9U);
}

TEST(PermittedEdges, DisjointFromGraph) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : enumerate_sequences(n, false)) {
      const auto g = s.decode();
      for (const auto& e : permitted_edges(s)) ASSERT_FALSE(g.has_edge(e.row, e.col)) << format_sequence(s);
    }
}

TEST(Degenerate, Examples) {
  EXPECT_TRUE(is_degenerate(RepresentingSequence(2, Pairs{{0, 1}, {1, 2}})));
  EXPECT_FALSE(is_degenerate(RepresentingSequence(2, Pairs{{0, 1}, {2, 2}})));
  EXPECT_FALSE(is_degenerate(RepresentingSequence(4, Pairs{{4, 4}})));
}

TEST(BlockDecompose, Examples) {
  const int n = 5;
  for (int d = 0; d < n; ++d)
    for (int k = 1; k < n; ++k) {
      const auto bd = block_decompose(RepresentingSequence(n, Pairs{{d, k}, {n, n}}));
      ASSERT_EQ(bd.blocks.size(), 1U);
      EXPECT_EQ(bd.blocks[0], Block(n, d, k));
      EXPECT_EQ(bd.final_top, n - k - 1);
      EXPECT_EQ(bd.final_bottom, 0);
    }
  const auto full = block_decompose(RepresentingSequence(4, Pairs{{4, 4}}));
  EXPECT_TRUE(full.blocks.empty());
  EXPECT_EQ(full.final_top, 3);
  EXPECT_EQ(full.final_bottom, 0);
  const auto small = block_decompose(RepresentingSequence(2, Pairs{{1, 1}, {2, 2}}));
  ASSERT_EQ(small.blocks.size(), 1U);
  EXPECT_EQ(small.blocks[0], Block(2, 1, 1));
  EXPECT_EQ(small.final_top, 0);
  EXPECT_EQ(small.final_bottom, 0);
}

TEST(Block, Ranges) {
  EXPECT_THROW(Block(3, 0, 0), Error);
  EXPECT_THROW(Block(3, 0, 3), Error);
  EXPECT_THROW(Block(3, 4, 1), Error);
  EXPECT_EQ(Block(3, 1, 2).sequence(), RepresentingSequence(3, Pairs{{1, 2}, {3, 3}}));
}

}  // namespace
}  // namespace bpm
