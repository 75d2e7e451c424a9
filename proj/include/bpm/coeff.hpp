#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "bpm/bigraph.hpp"
#include "bpm/ordered.hpp"

namespace bpm {

using Coefficient = boost::multiprecision::cpp_int;

// C(a, b) when 0 <= b <= a, otherwise 0. No negative-argument extension.
Coefficient binomial(long a, long b);

// Factor of the closed form: C(n-1, k) for d <= 0, else
// -C(n-d-1, k-d) * C(k-1, d-1).
Coefficient f_factor(long n, long d, long k);

Coefficient block_coefficient(const Block& block);

// Coefficient of the monomial prod_{e in E(G)} x_e in the multilinear
// polynomial of the dual matching function.
Coefficient dual_coefficient(const BipartiteGraph& g);
Coefficient dual_coefficient(const RepresentingSequence& s);

// Product of the block coefficients and the final biclique binomial.
Coefficient coefficient_from_blocks(const BlockDecomposition& decomposition);

}  // namespace bpm
