#include "bpm/sensitivity.hpp"

#include <algorithm>

namespace bpm {

SensitivityReport sensitivity_at(const BipartiteGraph& x, kernels::Exec exec) {
  const int n = x.n();
  require_size(n <= limits::kMaxSensitivitySide,
               "sensitivity_at runs n^2 matching tests; n must be <= " +
                   std::to_string(limits::kMaxSensitivitySide));
  const bool base = has_perfect_matching(x);
  const int positions = n * n;
  std::vector<char> flips(static_cast<std::size_t>(positions), 0);
  if (exec == kernels::Exec::Serial) {
    for (int p = 0; p < positions; ++p)
      flips[static_cast<std::size_t>(p)] = has_perfect_matching(x.with_flipped(p / n, p % n)) != base;
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (int p = 0; p < positions; ++p)
      flips[static_cast<std::size_t>(p)] = has_perfect_matching(x.with_flipped(p / n, p % n)) != base;
  }
  SensitivityReport r{.n = n, .input = x};
  for (int p = 0; p < positions; ++p)
    if (flips[static_cast<std::size_t>(p)]) r.sensitive_edges.push_back({p / n, p % n});
  r.count = static_cast<int>(r.sensitive_edges.size());
  if (n >= 2) {
    r.lower_bound_formula = static_cast<int>(sens_lower_bound(n));
    r.degree_lower_bound = static_cast<int>(degree_lower_bound(n));
  }
  return r;
}

BipartiteGraph construct_path_input(int n) {
  if (n < 2) throw Error(ErrorCode::DomainError, "construct_path_input needs n >= 2");
  const int h = n / 2;
  std::vector<Edge> edges;
  // P1: a_1 b_1 a_2 b_2 ... a_h b_h a_{h+1}.
  for (int i = 0; i < h; ++i) {
    edges.push_back({i, i});
    edges.push_back({i + 1, i});
  }
  // P2: b_{h+1} a_{h+2} b_{h+2} ... ; left vertices h+1..n-1, right h..n-1.
  for (int i = h + 1; i < n; ++i) {
    edges.push_back({i, i - 1});
    edges.push_back({i, i});
  }
  return BipartiteGraph::from_edges(n, edges);
}

std::vector<Edge> expected_sensitive_edges(int n) {
  if (n < 2) throw Error(ErrorCode::DomainError, "expected_sensitive_edges needs n >= 2");
  const int h = n / 2;
  std::vector<Edge> out;
  for (int i = 0; i <= h; ++i)
    for (int j = h; j < n; ++j) out.push_back({i, j});
  std::sort(out.begin(), out.end());
  return out;
}

long long sens_lower_bound(int n) {
  if (n < 2) throw Error(ErrorCode::DomainError, "sens_lower_bound needs n >= 2");
  const long long half = n / 2;
  if (n % 2 == 0) return half * (half + 1);
  return (half + 1) * (half + 1);
}

long long degree_lower_bound(int n) {
  const long long s = sens_lower_bound(n);
  // Smallest d with 6 d^2 >= s.
  long long d = 0;
  while (6 * d * d < s) ++d;
  return d;
}

}  // namespace bpm
