#pragma once

#include <vector>

#include "bpm/bigraph.hpp"
#include "bpm/kernels.hpp"

namespace bpm {

struct SensitivityReport {
  int n = 0;
  BipartiteGraph input{1};
  // Positions whose flip changes the perfect-matching output, row-major.
  std::vector<Edge> sensitive_edges;
  int count = 0;
  int lower_bound_formula = 0;
  int degree_lower_bound = 0;
};

// Flips each of the n^2 input bits once. Requires n <= 16.
SensitivityReport sensitivity_at(const BipartiteGraph& x,
                                 kernels::Exec exec = kernels::Exec::Parallel);

// Two vertex-disjoint paths: P1 = a_1 b_1 a_2 ... b_h a_{h+1} with h = floor(n/2),
// and P2 alternating through the remaining vertices starting at b_{h+1}.
// P1 has an odd vertex count, so the graph has no perfect matching, while
// joining any left vertex of P1 to any right vertex of P2 creates one.
BipartiteGraph construct_path_input(int n);

// The left vertices of P1 times the right vertices of P2.
std::vector<Edge> expected_sensitive_edges(int n);

// (n/2)(n/2 + 1) for even n, ((n-1)/2 + 1)^2 for odd n.
long long sens_lower_bound(int n);

// ceil(sqrt(sens_lower_bound(n) / 6)): block sensitivity equals sensitivity
// for monotone functions and bs <= 6 deg_{1/3}^2.
long long degree_lower_bound(int n);

}  // namespace bpm
