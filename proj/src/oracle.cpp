#include "bpm/oracle.hpp"

#include <bit>
#include <numeric>

#include "bpm/ordered.hpp"

namespace bpm::oracle {

namespace {

int sign(int exponent) { return (exponent & 1) ? -1 : 1; }

// Calls visit(superset_mask) for every superset of `base` inside `full`.
template <typename Visit>
void for_each_superset(std::uint64_t base, std::uint64_t full, Visit&& visit) {
  for (std::uint64_t s = base;; s = (s + 1) | base) {
    visit(s);
    if (s == full) break;
  }
}

std::uint64_t full_mask(int n) {
  return n * n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n * n)) - 1);
}

}  // namespace

int bpm_star_value(const BipartiteGraph& g) { return has_perfect_matching(complement(g)) ? 0 : 1; }

Coefficient mobius_coefficient(const BipartiteGraph& g) {
  const int edges = g.edge_count();
  require_size(edges <= limits::kMaxMobiusEdges,
               "mobius_coefficient enumerates 2^|E| subgraphs; |E| must be <= " +
                   std::to_string(limits::kMaxMobiusEdges));
  const std::vector<Edge> e = g.edges();
  long long total = 0;
  const std::uint64_t count = std::uint64_t{1} << edges;
  for (std::uint64_t sub = 0; sub < count; ++sub) {
    std::vector<BipartiteGraph::Row> rows(static_cast<std::size_t>(g.n()), 0);
    for (int b = 0; b < edges; ++b)
      if ((sub >> b) & 1U)
        rows[static_cast<std::size_t>(e[static_cast<std::size_t>(b)].row)] |=
            BipartiteGraph::Row{1} << e[static_cast<std::size_t>(b)].col;
    const int value = bpm_star_value(BipartiteGraph(g.n(), std::move(rows)));
    if (value) total += sign(edges - std::popcount(sub));
  }
  return total;
}

Coefficient mc_chi_sum_unrestricted(const BipartiteGraph& g) {
  require_size(g.n() <= limits::kMaxSupergraphSide,
               "mc_chi_sum_coefficient enumerates supergraphs; n must be <= " +
                   std::to_string(limits::kMaxSupergraphSide));
  const int n = g.n();
  long long total = 0;
  for_each_superset(g.mask(), full_mask(n), [&](std::uint64_t s) {
    const BipartiteGraph h = BipartiteGraph::from_mask(n, s);
    if (is_matching_covered(h)) total += sign(cyclomatic_number(h));
  });
  return Coefficient(total * sign(g.edge_count() + 1));
}

Coefficient mc_chi_sum_coefficient(const BipartiteGraph& g) {
  if (g.edge_count() == 0)
    throw Error(ErrorCode::EmptyGraph, "the matching-covered sum does not apply to the empty graph");
  return mc_chi_sum_unrestricted(g);
}

bool one_side_connected(const BipartiteGraph& g) {
  const int n = g.n();
  std::vector<int> parent(static_cast<std::size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const Edge& e : g.edges()) {
    const int a = find(e.row);
    const int b = find(n + e.col);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  bool left_together = true;
  bool right_together = true;
  for (int v = 1; v < n; ++v) {
    left_together = left_together && find(v) == find(0);
    right_together = right_together && find(n + v) == find(n);
  }
  return left_together || right_together;
}

Coefficient elementary_sum_coefficient(const BipartiteGraph& g) {
  require_size(g.n() <= limits::kMaxSupergraphSide,
               "elementary_sum_coefficient enumerates supergraphs; n must be <= " +
                   std::to_string(limits::kMaxSupergraphSide));
  if (!one_side_connected(g))
    throw Error(ErrorCode::PreconditionViolated,
                "elementary sum needs all left or all right vertices in one component");
  const int n = g.n();
  const std::uint64_t base = g.mask();
  long long total = 0;
  for_each_superset(base, full_mask(n), [&](std::uint64_t s) {
    if (is_elementary(BipartiteGraph::from_mask(n, s))) total += sign(std::popcount(s & ~base));
  });
  return total;
}

Coefficient permitted_sum_coefficient(const BipartiteGraph& sorted) {
  require_size(sorted.n() <= limits::kMaxPermittedSide,
               "permitted_sum_coefficient needs n <= " + std::to_string(limits::kMaxPermittedSide));
  // Throws NotSortedOrdered for unsorted input.
  const RepresentingSequence seq = representing_sequence(sorted);
  const std::vector<Edge> permitted = permitted_edges(seq);
  const auto count = std::uint64_t{1} << permitted.size();
  long long total = 0;
  for (std::uint64_t sub = 0; sub < count; ++sub) {
    BipartiteGraph h = sorted;
    for (std::size_t b = 0; b < permitted.size(); ++b)
      if ((sub >> b) & 1U) h = h.with_edge(permitted[b].row, permitted[b].col);
    if (is_elementary(h)) total += sign(std::popcount(sub));
  }
  return total;
}

std::vector<std::int32_t> coefficient_values(int n, bool huge, kernels::Exec exec) {
  const int cap = huge ? limits::kMaxTableSideHuge : limits::kMaxTableSide;
  require_size(n >= 1 && n <= cap, "coefficient_table needs 1 <= n <= " + std::to_string(cap) +
                                       (huge ? "" : " (n = 5 needs --huge)"));
  std::vector<std::int32_t> values = kernels::bpm_star_truth_table(n, exec);
  kernels::mobius_transform(values, exec);
  return values;
}

DualPolynomial coefficient_table(int n, bool huge, kernels::Exec exec) {
  const std::vector<std::int32_t> values = coefficient_values(n, huge, exec);
  DualPolynomial poly(n);
  for (std::size_t s = 0; s < values.size(); ++s)
    if (values[s] != 0) poly.add(s, values[s]);
  return poly;
}

}  // namespace bpm::oracle
