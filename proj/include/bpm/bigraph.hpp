#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bpm/error.hpp"

namespace bpm {

// 0-based (row, column) pair; I/O converts to 1-based.
struct Edge {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Balanced bipartite graph on the vertices of K_{n,n}. Row i holds the
// neighbourhood of left vertex a_i as a bit-set over right vertices b_j.
class BipartiteGraph {
 public:
  using Row = std::uint32_t;

  explicit BipartiteGraph(int n);
  BipartiteGraph(int n, std::vector<Row> rows);

  static BipartiteGraph complete(int n);
  static BipartiteGraph from_edges(int n, std::span<const Edge> edges);
  // Row-major edge mask: bit (i*n + j) is edge (a_i, b_j). Requires n <= 8.
  static BipartiteGraph from_mask(int n, std::uint64_t mask);

  int n() const noexcept { return n_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  Row row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  Row full_row() const noexcept;

  bool has_edge(int i, int j) const { return (row(i) >> j) & 1U; }
  int edge_count() const noexcept;
  int left_degree(int i) const;
  int right_degree(int j) const;
  Row column(int j) const;

  std::vector<Edge> edges() const;
  std::uint64_t mask() const;

  BipartiteGraph with_edge(int i, int j) const;
  BipartiteGraph without_edge(int i, int j) const;
  BipartiteGraph with_flipped(int i, int j) const;
  BipartiteGraph transpose() const;
  // H(i, j) = G(left[i], right[j]).
  BipartiteGraph permuted(std::span<const int> left, std::span<const int> right) const;
  // Induced subgraph on the given left and right vertex lists, relabelled
  // 0..size-1 in list order. Both lists must have the same length.
  BipartiteGraph induced(std::span<const int> left, std::span<const int> right) const;

  bool is_subgraph_of(const BipartiteGraph& other) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int n_;
  std::vector<Row> rows_;
};

bool has_perfect_matching(const BipartiteGraph& g);
// Perfect matching on the graph with left vertex `skip_row` and right vertex
// `skip_col` deleted (n-1 per side). Either index may be -1 to keep all.
bool has_perfect_matching_without(const BipartiteGraph& g, int skip_row, int skip_col);

BipartiteGraph complement(const BipartiteGraph& g);

// Components of the graph on all 2n vertices; isolated vertices count.
int connected_components(const BipartiteGraph& g);
int cyclomatic_number(const BipartiteGraph& g);

// Requires at least one perfect matching, so the empty graph is excluded.
bool is_matching_covered(const BipartiteGraph& g);
bool is_elementary(const BipartiteGraph& g);

struct HetyeiConditions {
  bool elementary = false;
  bool two_minimum_covers = false;
  bool positive_surplus = false;
  bool matchable_after_deleting_pair = false;
  bool connected_all_edges_allowed = false;

  bool all_equal() const;
};

HetyeiConditions hetyei_conditions(const BipartiteGraph& g);

// Graph text format: line 1 holds n, then n lines of n characters in {0,1}.
BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph parse_graph(const std::string& text);
BipartiteGraph read_graph_file(const std::string& path);
std::string format_graph(const BipartiteGraph& g);

// "(1,1),(1,2)" with 1-based indices, lexicographic order; "-" if empty.
std::string format_edge_list(std::span<const Edge> edges);

}  // namespace bpm
