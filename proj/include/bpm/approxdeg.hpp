#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bpm/kernels.hpp"
#include "bpm/numeric.hpp"

namespace bpm {

// p(t) = sum_j c_j T_j(2t/m - 1) on [0, m].
class UnivariatePolynomial {
 public:
  UnivariatePolynomial(int m, std::vector<Rational> coefficients);

  int m() const { return m_; }
  int degree() const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational evaluate(const Rational& t) const;
  HighFloat evaluate(const HighFloat& t) const;
  // Largest |p(k) - AND(k)| over k = 0..m, exact.
  Rational max_and_error() const;

 private:
  int m_;
  std::vector<Rational> c_;
};

// The exact AND_m polynomial C(t, m) in the Chebyshev basis on [0, m].
UnivariatePolynomial exact_and_polynomial(int m);

enum class AndMethod {
  Exchange,  // discrete Remez exchange on the dual problem (default)
  Simplex,   // primal feasibility LP over Chebyshev coefficients
};

struct AndOptions {
  AndMethod method = AndMethod::Exchange;
  // Relative slack accepted by the 50-digit certification.
  double tolerance = 1e-12;
  // Lifts the m <= 256 cap to 4096 (used by bpm_degree_bound).
  bool allow_huge = false;
  kernels::Exec exec = kernels::Exec::Parallel;
};

// epsilon * 2^{-2n} * (n+2)^{-(2n+2)}.
Rational epsilon_prime(int n, const Rational& epsilon);

// 2^{-m log2 m} <= epsilon <= 1/3.
bool in_and_regime(int m, const Rational& epsilon);
// 2^{-n log2 n} <= epsilon <= 1/3.
bool in_bpm_regime(int n, const Rational& epsilon);

// Is there p of degree <= d with |p(k)| <= eps on 0..m-1 and |p(m) - 1| <= eps?
bool and_degree_feasible(int m, const Rational& epsilon, int d, const AndOptions& options = {});

// Least such d, found by binary search and certified at 50 digits.
int min_and_approx_degree(int m, const Rational& epsilon, const AndOptions& options = {});

// A certified witness at the least degree.
UnivariatePolynomial build_and_approximant(int m, const Rational& epsilon,
                                           const AndOptions& options = {});

struct DegreeBoundReport {
  int n = 0;
  Rational epsilon;
  Rational epsilon_prime;
  double log2_epsilon_prime = 0;
  int threshold = 0;  // ceil(n^{1.5})
  int and_degree = 0;
  int overall_bound = 0;
  bool epsilon_in_regime = true;        // 2^{-n log n} <= eps <= 1/3
  bool epsilon_prime_in_regime = true;  // same test for AND_{n^2} at eps'
};

DegreeBoundReport bpm_degree_bound(int n, const Rational& epsilon,
                                   kernels::Exec exec = kernels::Exec::Parallel);
std::string report_tsv(const DegreeBoundReport& r);
std::string report_json(const DegreeBoundReport& r);

// Multilinear polynomial over at most 64 variables; bit i of a key is x_i.
class MultilinearPolynomial {
 public:
  explicit MultilinearPolynomial(int variables);

  int variables() const { return vars_; }
  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
  void add(std::uint64_t monomial, const Rational& c);
  Rational coefficient(std::uint64_t monomial) const;
  int degree() const;
  Rational evaluate(std::uint64_t point) const;

  bool operator==(const MultilinearPolynomial&) const = default;

 private:
  int vars_;
  std::map<std::uint64_t, Rational> terms_;
};

// 1 - p(1 - x).
MultilinearPolynomial dualize_polynomial(const MultilinearPolynomial& p);

struct AssembledApproximant {
  int n = 0;
  Rational epsilon;
  Rational epsilon_prime;
  int threshold = 0;
  int exact_terms = 0;
  int approximated_terms = 0;
  std::map<int, int> and_degrees;  // monomial size -> witness degree
  MultilinearPolynomial polynomial{1};
  MultilinearPolynomial dual{1};
  int degree = 0;
  Rational max_error;       // against BPM*_n over all inputs
  Rational dual_max_error;  // against BPM_n over all inputs
};

// Variables are the n^2 edges in row-major order. Throws NumericalFailure if
// the exhaustive check exceeds epsilon.
AssembledApproximant assemble_bpm_approximant(int n, const Rational& epsilon);

}  // namespace bpm
