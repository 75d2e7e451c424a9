#pragma once

#include <functional>
#include <vector>

#include "bpm/coeff.hpp"
#include "bpm/dual_polynomial.hpp"
#include "bpm/ordered.hpp"

namespace bpm {

// Every valid representing sequence for side n, lexicographically by the
// (d, k) pair list. With nonzero_only, keeps those with a nonzero closed-form
// coefficient. Requires n <= 10.
void for_each_sequence(int n, bool nonzero_only,
                       const std::function<void(const RepresentingSequence&)>& visit);
std::vector<RepresentingSequence> enumerate_sequences(int n, bool nonzero_only);

// Number of labeled graphs isomorphic to the decoded sorted graph under
// separate row and column relabelling.
Coefficient labeled_count(const RepresentingSequence& s);

Coefficient monomial_count(int n);
Coefficient max_abs_coefficient(int n);

// Full labeled dual polynomial from the closed form, n <= 4.
DualPolynomial materialize(int n);

Coefficient evaluate(const DualPolynomial& p, const BipartiteGraph& x);

struct CountReport {
  int n = 0;
  Coefficient monomials;
  Coefficient max_abs;
  Coefficient monomial_lower;   // (n!)^2
  Coefficient monomial_upper;   // (n+2)^{2n+2}
  Coefficient magnitude_upper;  // 2^{2n}
  Coefficient magnitude_lower;  // C(n-1, floor(n/2))
  // log2(monomials) / (2 n log2 n); reported, never asserted.
  double growth_exponent_ratio = 0.0;

  bool monomial_bounds_hold() const;
  bool magnitude_bounds_hold() const;
};

CountReport count_report(int n);

}  // namespace bpm
