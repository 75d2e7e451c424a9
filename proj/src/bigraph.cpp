#include "bpm/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

namespace bpm {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotTotallyOrdered: return "NotTotallyOrdered";
    case ErrorCode::NotSortedOrdered: return "NotSortedOrdered";
    case ErrorCode::DegenerateSequence: return "DegenerateSequence";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void check_side(int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "side size must be positive");
  require_size(n <= limits::kMaxSide,
               "side size " + std::to_string(n) + " exceeds cap " +
                   std::to_string(limits::kMaxSide));
}

}  // namespace

BipartiteGraph::BipartiteGraph(int n) : n_(n) {
  check_side(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

BipartiteGraph::BipartiteGraph(int n, std::vector<Row> rows) : n_(n), rows_(std::move(rows)) {
  check_side(n);
  if (rows_.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::DimensionMismatch, "row count differs from n");
  for (Row r : rows_)
    if ((r & ~full_row()) != 0)
      throw Error(ErrorCode::DomainError, "row bit index out of range");
}

BipartiteGraph BipartiteGraph::complete(int n) {
  BipartiteGraph g(n);
  std::fill(g.rows_.begin(), g.rows_.end(), g.full_row());
  return g;
}

BipartiteGraph BipartiteGraph::from_edges(int n, std::span<const Edge> edges) {
  BipartiteGraph g(n);
  for (const Edge& e : edges) {
    if (e.row < 0 || e.row >= n || e.col < 0 || e.col >= n)
      throw Error(ErrorCode::DomainError, "edge endpoint out of range");
    g.rows_[static_cast<std::size_t>(e.row)] |= Row{1} << e.col;
  }
  return g;
}

BipartiteGraph BipartiteGraph::from_mask(int n, std::uint64_t mask) {
  if (n > 8) throw Error(ErrorCode::SizeLimit, "edge masks need n <= 8");
  BipartiteGraph g(n);
  const std::uint64_t row_bits = (std::uint64_t{1} << n) - 1;
  for (int i = 0; i < n; ++i)
    g.rows_[static_cast<std::size_t>(i)] = static_cast<Row>((mask >> (i * n)) & row_bits);
  if (n * n < 64 && (mask >> (n * n)) != 0)
    throw Error(ErrorCode::DomainError, "mask has bits beyond n*n");
  return g;
}

BipartiteGraph::Row BipartiteGraph::full_row() const noexcept {
  return n_ == 32 ? ~Row{0} : ((Row{1} << n_) - 1);
}

int BipartiteGraph::edge_count() const noexcept {
  int total = 0;
  for (Row r : rows_) total += std::popcount(r);
  return total;
}

int BipartiteGraph::left_degree(int i) const { return std::popcount(row(i)); }

int BipartiteGraph::right_degree(int j) const { return std::popcount(column(j)); }

BipartiteGraph::Row BipartiteGraph::column(int j) const {
  Row c = 0;
  for (int i = 0; i < n_; ++i)
    if (has_edge(i, j)) c |= Row{1} << i;
  return c;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (has_edge(i, j)) out.push_back({i, j});
  return out;
}

std::uint64_t BipartiteGraph::mask() const {
  if (n_ > 8) throw Error(ErrorCode::SizeLimit, "edge masks need n <= 8");
  std::uint64_t m = 0;
  for (int i = 0; i < n_; ++i) m |= std::uint64_t{row(i)} << (i * n_);
  return m;
}

BipartiteGraph BipartiteGraph::with_edge(int i, int j) const {
  BipartiteGraph g = *this;
  g.rows_[static_cast<std::size_t>(i)] |= Row{1} << j;
  return g;
}

BipartiteGraph BipartiteGraph::without_edge(int i, int j) const {
  BipartiteGraph g = *this;
  g.rows_[static_cast<std::size_t>(i)] &= ~(Row{1} << j);
  return g;
}

BipartiteGraph BipartiteGraph::with_flipped(int i, int j) const {
  BipartiteGraph g = *this;
  g.rows_[static_cast<std::size_t>(i)] ^= Row{1} << j;
  return g;
}

BipartiteGraph BipartiteGraph::transpose() const {
  BipartiteGraph g(n_);
  for (int j = 0; j < n_; ++j) g.rows_[static_cast<std::size_t>(j)] = column(j);
  return g;
}

BipartiteGraph BipartiteGraph::permuted(std::span<const int> left,
                                        std::span<const int> right) const {
  if (left.size() != rows_.size() || right.size() != rows_.size())
    throw Error(ErrorCode::DimensionMismatch, "permutation length differs from n");
  BipartiteGraph g(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (has_edge(left[static_cast<std::size_t>(i)], right[static_cast<std::size_t>(j)]))
        g.rows_[static_cast<std::size_t>(i)] |= Row{1} << j;
  return g;
}

BipartiteGraph BipartiteGraph::induced(std::span<const int> left,
                                       std::span<const int> right) const {
  if (left.size() != right.size() || left.empty())
    throw Error(ErrorCode::DimensionMismatch, "induced subgraph must be balanced and nonempty");
  const int m = static_cast<int>(left.size());
  BipartiteGraph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (has_edge(left[static_cast<std::size_t>(i)], right[static_cast<std::size_t>(j)]))
        g.rows_[static_cast<std::size_t>(i)] |= Row{1} << j;
  return g;
}

bool BipartiteGraph::is_subgraph_of(const BipartiteGraph& other) const {
  if (other.n_ != n_) return false;
  for (int i = 0; i < n_; ++i)
    if ((row(i) & ~other.row(i)) != 0) return false;
  return true;
}

namespace {

// Kuhn's augmenting path search from left vertex u.
bool augment(const BipartiteGraph& g, int u, std::uint32_t allowed_cols,
             std::vector<int>& match_of_col, std::uint32_t& visited) {
  std::uint32_t candidates = g.row(u) & allowed_cols & ~visited;
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (visited & (1U << v)) continue;
    visited |= 1U << v;
    int& owner = match_of_col[static_cast<std::size_t>(v)];
    if (owner < 0 || augment(g, owner, allowed_cols, match_of_col, visited)) {
      owner = u;
      return true;
    }
  }
  return false;
}

}  // namespace

bool has_perfect_matching_without(const BipartiteGraph& g, int skip_row, int skip_col) {
  const int n = g.n();
  std::uint32_t allowed = g.full_row();
  if (skip_col >= 0) allowed &= ~(1U << skip_col);
  std::vector<int> match_of_col(static_cast<std::size_t>(n), -1);
  for (int u = 0; u < n; ++u) {
    if (u == skip_row) continue;
    std::uint32_t visited = 0;
    if (!augment(g, u, allowed, match_of_col, visited)) return false;
  }
  return true;
}

bool has_perfect_matching(const BipartiteGraph& g) {
  return has_perfect_matching_without(g, -1, -1);
}

BipartiteGraph complement(const BipartiteGraph& g) {
  std::vector<BipartiteGraph::Row> rows(g.rows());
  for (auto& r : rows) r = ~r & g.full_row();
  return BipartiteGraph(g.n(), std::move(rows));
}

int connected_components(const BipartiteGraph& g) {
  const int n = g.n();
  // Vertices 0..n-1 are a_i, n..2n-1 are b_j.
  std::vector<int> parent(static_cast<std::size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = 2 * n;
  for (const Edge& e : g.edges()) {
    const int a = find(e.row);
    const int b = find(n + e.col);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components;
}

int cyclomatic_number(const BipartiteGraph& g) {
  return g.edge_count() - 2 * g.n() + connected_components(g);
}

bool is_matching_covered(const BipartiteGraph& g) {
  if (!has_perfect_matching(g)) return false;
  for (const Edge& e : g.edges())
    if (!has_perfect_matching_without(g, e.row, e.col)) return false;
  return true;
}

bool is_elementary(const BipartiteGraph& g) {
  return connected_components(g) == 1 && is_matching_covered(g);
}

bool HetyeiConditions::all_equal() const {
  return elementary == two_minimum_covers && elementary == positive_surplus &&
         elementary == matchable_after_deleting_pair &&
         elementary == connected_all_edges_allowed;
}

namespace {

std::uint32_t neighbourhood(const BipartiteGraph& g, std::uint32_t left_set) {
  std::uint32_t out = 0;
  while (left_set != 0) {
    out |= g.row(std::countr_zero(left_set));
    left_set &= left_set - 1;
  }
  return out;
}

// Covers are (left_set, right_set) pairs; a cover must hit every edge.
bool exactly_sides_are_minimum_covers(const BipartiteGraph& g) {
  const int n = g.n();
  const std::uint32_t full = g.full_row();
  int best = 2 * n + 1;
  int count_at_best = 0;
  bool only_sides = true;
  for (std::uint32_t left = 0; left <= full; ++left) {
    // Given the left part, the smallest cover takes exactly the right
    // neighbours of uncovered left vertices; every superset of that works too.
    const std::uint32_t forced_right = neighbourhood(g, full & ~left);
    for (std::uint32_t right = 0; right <= full; ++right) {
      if ((right & forced_right) != forced_right) continue;
      const int size = std::popcount(left) + std::popcount(right);
      const bool is_side = (left == full && right == 0) || (left == 0 && right == full);
      if (size < best) {
        best = size;
        count_at_best = 1;
        only_sides = is_side;
      } else if (size == best) {
        ++count_at_best;
        only_sides = only_sides && is_side;
      }
    }
    if (left == full) break;
  }
  return count_at_best == 2 && only_sides;
}

bool surplus_condition(const BipartiteGraph& g) {
  const std::uint32_t full = g.full_row();
  // X = A itself must satisfy Hall's condition; for n >= 2 the strict surplus
  // on proper subsets already implies it, for n = 1 it excludes the empty graph.
  if (std::popcount(neighbourhood(g, full)) < g.n()) return false;
  for (std::uint32_t x = 1; x < full; ++x)
    if (std::popcount(neighbourhood(g, x)) <= std::popcount(x)) return false;
  return true;
}

bool pair_deletion_condition(const BipartiteGraph& g) {
  const int n = g.n();
  if (n == 1) return g.has_edge(0, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!has_perfect_matching_without(g, a, b)) return false;
  return true;
}

bool connected_and_all_allowed(const BipartiteGraph& g) {
  if (connected_components(g) != 1) return false;
  // An allowed edge lies in some perfect matching.
  for (const Edge& e : g.edges())
    if (!has_perfect_matching_without(g, e.row, e.col)) return false;
  return true;
}

}  // namespace

HetyeiConditions hetyei_conditions(const BipartiteGraph& g) {
  require_size(g.n() <= limits::kMaxHetyeiSide,
               "hetyei_conditions enumerates vertex covers; n must be <= " +
                   std::to_string(limits::kMaxHetyeiSide));
  HetyeiConditions c;
  c.elementary = is_elementary(g);
  c.two_minimum_covers = exactly_sides_are_minimum_covers(g);
  c.positive_surplus = surplus_condition(g);
  c.matchable_after_deleting_pair = pair_deletion_condition(g);
  c.connected_all_edges_allowed = connected_and_all_allowed(g);
  return c;
}

BipartiteGraph parse_graph(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (!out.empty()) return true;
    }
    return false;
  };
  if (!next_line(line)) throw Error(ErrorCode::ParseError, "missing side size line");
  int n = 0;
  {
    std::istringstream head(line);
    if (!(head >> n) || n < 1) throw Error(ErrorCode::ParseError, "invalid side size '" + line + "'");
    std::string rest;
    if (head >> rest) throw Error(ErrorCode::ParseError, "trailing text after side size");
  }
  require_size(n <= limits::kMaxSide, "side size exceeds cap " + std::to_string(limits::kMaxSide));
  std::vector<BipartiteGraph::Row> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (!next_line(line))
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " matrix rows");
    if (static_cast<int>(line.size()) != n)
      throw Error(ErrorCode::ParseError, "ragged row " + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      const char ch = line[static_cast<std::size_t>(j)];
      if (ch == '1')
        rows[static_cast<std::size_t>(i)] |= BipartiteGraph::Row{1} << j;
      else if (ch != '0')
        throw Error(ErrorCode::ParseError, std::string("invalid character '") + ch + "'");
    }
  }
  if (next_line(line)) throw Error(ErrorCode::ParseError, "extra lines after matrix");
  return BipartiteGraph(n, std::move(rows));
}

BipartiteGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

BipartiteGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open graph file " + path);
  return parse_graph(in);
}

std::string format_graph(const BipartiteGraph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) out += g.has_edge(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string format_edge_list(std::span<const Edge> edges) {
  if (edges.empty()) return "-";
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k) out += ',';
    out += '(' + std::to_string(sorted[k].row + 1) + ',' + std::to_string(sorted[k].col + 1) + ')';
  }
  return out;
}

}  // namespace bpm
