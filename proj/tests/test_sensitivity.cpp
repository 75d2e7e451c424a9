#include <gtest/gtest.h>

#include "bpm/sensitivity.hpp"

namespace bpm {
namespace {

TEST(Sensitivity, Examples) {
  EXPECT_EQ(sensitivity_at(BipartiteGraph::complete(2)).count, 0);
  const auto r = sensitivity_at(construct_path_input(2));
  EXPECT_EQ(r.count, 2);
  EXPECT_EQ(r.sensitive_edges, (std::vector<Edge>{{0, 1}, {1, 1}}));
  EXPECT_EQ(sensitivity_at(construct_path_input(6)).count, 12);
}

TEST(Sensitivity, PathInputShape) {
  const std::vector<Edge> two{{0, 0}, {1, 0}};
  EXPECT_EQ(construct_path_input(2), BipartiteGraph::from_edges(2, two));
  const auto g4 = construct_path_input(4);
  EXPECT_EQ(g4.edge_count(), 6);
  int p1 = 0;
  for (const auto& e : g4.edges())
    if (e.row <= 2 && e.col <= 1) ++p1;
  EXPECT_EQ(p1, 4);
  EXPECT_THROW(construct_path_input(1), Error);
}

TEST(Sensitivity, ConstructedInputs) {
  for (int n = 2; n <= 9; ++n) {
    const auto x = construct_path_input(n);
    EXPECT_FALSE(has_perfect_matching(x));
    const auto r = sensitivity_at(x);
    EXPECT_GE(r.count, sens_lower_bound(n));
    if (n % 2 == 0) {
      EXPECT_EQ(r.count, sens_lower_bound(n));
      EXPECT_EQ(r.sensitive_edges, expected_sensitive_edges(n));
    }
    for (const auto& e : r.sensitive_edges) EXPECT_TRUE(has_perfect_matching(x.with_edge(e.row, e.col)));
  }
  EXPECT_EQ(sensitivity_at(construct_path_input(5)).count, 9);
}

TEST(Sensitivity, SerialMatchesParallel) {
  for (int n : {4, 7, 12}) {
    const auto x = construct_path_input(n);
    EXPECT_EQ(sensitivity_at(x, kernels::Exec::Serial).sensitive_edges,
              sensitivity_at(x, kernels::Exec::Parallel).sensitive_edges);
  }
}

// Removing an edge of an elementary graph keeps a perfect matching and adding
// one cannot destroy it, so the count is 0 whenever n >= 2.
TEST(Sensitivity, ElementaryGraphsAreInsensitive) {
  for (int n = 2; n <= 3; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
      const auto g = BipartiteGraph::from_mask(n, m);
      if (is_elementary(g)) ASSERT_EQ(sensitivity_at(g).count, 0) << m;
    }
}

// Matching-covered alone is not enough: a perfect matching loses its only
// matching when any of its edges is removed.
TEST(Sensitivity, MatchingCoveredCanBeSensitive) {
  const std::vector<Edge> pm{{0, 0}, {1, 1}};
  const auto g = BipartiteGraph::from_edges(2, pm);
  ASSERT_TRUE(is_matching_covered(g));
  EXPECT_EQ(sensitivity_at(g).count, 2);
  ASSERT_TRUE(is_matching_covered(BipartiteGraph::complete(1)));
  EXPECT_EQ(sensitivity_at(BipartiteGraph::complete(1)).count, 1);
}

TEST(Sensitivity, Bounds) {
  EXPECT_EQ(sens_lower_bound(2), 2);
  EXPECT_EQ(sens_lower_bound(3), 4);
  EXPECT_EQ(sens_lower_bound(6), 12);
  EXPECT_EQ(degree_lower_bound(2), 1);
  EXPECT_EQ(degree_lower_bound(6), 2);
  EXPECT_EQ(degree_lower_bound(100), 21);
  const auto r = sensitivity_at(construct_path_input(6));
  EXPECT_EQ(r.lower_bound_formula, 12);
  EXPECT_EQ(r.degree_lower_bound, 2);
}

TEST(Sensitivity, SizeCap) { EXPECT_THROW(sensitivity_at(BipartiteGraph(17)), Error); }

}  // namespace
}  // namespace bpm
