#pragma once

#include "bpm/bigraph.hpp"
#include "bpm/coeff.hpp"
#include "bpm/dual_polynomial.hpp"
#include "bpm/kernels.hpp"

// Brute-force ground truth for the closed form. Nothing here calls into the
// closed-form coefficient code.
namespace bpm::oracle {

// 1 iff the complement of g has no perfect matching.
int bpm_star_value(const BipartiteGraph& g);

// sum_{H subset G} (-1)^{|E(G) \ E(H)|} BPM*(H). Requires |E(G)| <= 25.
Coefficient mobius_coefficient(const BipartiteGraph& g);

// (-1)^{|E(G)|+1} sum over matching-covered H containing G of (-1)^{chi(H)}.
// Requires n <= 4 and a nonempty G.
Coefficient mc_chi_sum_coefficient(const BipartiteGraph& g);
// The same sum with no emptiness guard. At the empty graph it disagrees with
// the true constant term (for example -1 against 0 at n = 2).
Coefficient mc_chi_sum_unrestricted(const BipartiteGraph& g);

// True when all left vertices, or all right vertices, share one component.
bool one_side_connected(const BipartiteGraph& g);

// sum over elementary H containing G of (-1)^{|E(H) \ E(G)|}.
// Requires n <= 4 and one_side_connected(g).
Coefficient elementary_sum_coefficient(const BipartiteGraph& g);

// Same sum restricted to completions inside the permitted edges of a sorted
// ordered graph. Requires n <= 5.
Coefficient permitted_sum_coefficient(const BipartiteGraph& sorted);

// Whole coefficient table by fast subset Mobius inversion. n <= 4, or n = 5
// with `huge`.
std::vector<std::int32_t> coefficient_values(int n, bool huge = false,
                                             kernels::Exec exec = kernels::Exec::Parallel);
DualPolynomial coefficient_table(int n, bool huge = false,
                                 kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace bpm::oracle
