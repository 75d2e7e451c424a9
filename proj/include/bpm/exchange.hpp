#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bpm/kernels.hpp"
#include "bpm/numeric.hpp"

namespace bpm::exchange {

// The discrete exterior extremal problem
//   M_d(m) = max q(m)  over deg q <= d,  |q(k)| <= 1 for k = 0..m-1.
// A reference S of d+1 grid points determines Q, the polynomial equal to
// +-1 alternating on S. Every admissible q satisfies q(m) <= L_S = |Q(m)|, and
// Q / max_k |Q(k)| is admissible, so L_S / max|Q| <= M_d(m) <= L_S.
// Values are kept as natural logarithms; M_d(m) reaches 2^m.
struct ExteriorExtremum {
  int m = 0;
  int degree = 0;
  std::vector<int> reference;        // attains log_lower
  std::vector<int> upper_reference;  // attains log_upper
  long double log_lower = 0;  // ln(L_S / max|Q|) for the returned reference
  long double log_upper = 0;  // ln(L_S)
  int iterations = 0;
  bool converged = false;
};

struct SearchOptions {
  // Stop as soon as the bracket decides "M >= exp(target)" or "M < exp(target)".
  std::optional<long double> log_target;
  long double tolerance = 1e-12L;
  int max_iterations = 400;
  kernels::Exec exec = kernels::Exec::Parallel;
};

ExteriorExtremum exterior_extremum(int m, int degree, const SearchOptions& options = {});

// ln |w_i| and sign of the barycentric weights of the reference.
struct Weights {
  std::vector<long double> log_abs;
  long double log_node_product = 0;  // ln prod_j (m - s_j)
};
Weights reference_weights(int m, std::span<const int> reference);

// Q(k) for k = 0..m-1 (second-kind barycentric formula, long double).
std::vector<long double> reference_values(int m, std::span<const int> reference,
                                          kernels::Exec exec);
long double log_exterior_value(int m, std::span<const int> reference);

// 50-digit recomputation of max_k |Q(k)| and Q(m) for certification.
struct HighReference {
  HighFloat grid_max;
  HighFloat exterior;
};
HighReference certify_reference(int m, std::span<const int> reference, kernels::Exec exec);
// 50-digit L_S = Q(m); a sum of positive terms, so no cancellation.
HighFloat exterior_value_high(int m, std::span<const int> reference);
// 50-digit Q at an arbitrary point, through the first-kind formula.
HighFloat reference_value_high(int m, std::span<const int> reference, const HighFloat& t);

}  // namespace bpm::exchange
