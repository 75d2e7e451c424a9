#include "bpm/approxdeg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <nlohmann/json.hpp>

#include "bpm/bigraph.hpp"
#include "bpm/coeff.hpp"
#include "bpm/error.hpp"
#include "bpm/exchange.hpp"
#include "bpm/polyspace.hpp"
#include "bpm/simplex.hpp"

namespace bpm {

namespace {

using boost::multiprecision::cpp_int;

template <class T>
T clenshaw(const std::vector<T>& c, const T& x) {
  T b1 = 0, b2 = 0;
  for (std::size_t j = c.size(); j-- > 1;) {
    T b0 = c[j] + 2 * x * b1 - b2;
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  if (c.empty()) return T(0);
  return c[0] + x * b1 - b2;
}

// x * sum c_j T_j, using x T_0 = T_1 and x T_j = (T_{j+1} + T_{j-1}) / 2.
std::vector<Rational> times_x(const std::vector<Rational>& c) {
  std::vector<Rational> r(c.size() + 1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    if (j == 0) {
      r[1] += c[0];
    } else {
      r[j + 1] += c[j] / 2;
      r[j - 1] += c[j] / 2;
    }
  }
  return r;
}

void check_epsilon(const Rational& eps) {
  if (eps <= 0 || eps > Rational(1, 3))
    throw Error(ErrorCode::DomainError, "epsilon must lie in (0, 1/3]");
}

void check_and_size(int m, bool huge) {
  if (m < 1) throw Error(ErrorCode::DomainError, "m must be positive");
  const int cap = huge ? limits::kMaxAndVariablesHuge : limits::kMaxAndVariables;
  require_size(m <= cap, "AND approximation needs m <= " + std::to_string(cap));
}

// Feasibility threshold R = (1 - eps) / eps on max q(m) subject to |q| <= 1 on the grid.
Rational target_ratio(const Rational& eps) { return (1 - eps) / eps; }

long double log_of(const Rational& r) {
  return static_cast<long double>(log2_rational(r)) * std::numbers::ln2_v<long double>;
}

// A feasible candidate in scaled form: grid maximum G and exterior value E of
// some q; the centred witness q / (E + G) has error G / (E + G).
struct Candidate {
  bool feasible = false;
  std::vector<int> reference;        // exchange route
  std::vector<int> upper_reference;  // exchange route, infeasible probes
  std::vector<Rational> chebyshev;   // simplex route, q in the Chebyshev basis
};

bool ratio_certified(const HighFloat& exterior, const HighFloat& grid_max, const Rational& eps,
                     double tol) {
  return exterior >= to_high(target_ratio(eps)) * (1 - HighFloat(tol)) * grid_max;
}

std::vector<double> chebyshev_row(int m, int k, int d) {
  std::vector<double> row(static_cast<std::size_t>(d + 1));
  const double x = 2.0 * k / m - 1.0;
  for (int j = 0; j <= d; ++j)
    row[static_cast<std::size_t>(j)] =
        j == 0 ? 1.0 : j == 1 ? x : 2 * x * row[static_cast<std::size_t>(j - 1)] - row[static_cast<std::size_t>(j - 2)];
  return row;
}

// max_{k<m} |q(k)| and q(m) at 50 digits.
std::pair<HighFloat, HighFloat> evaluate_scaled(int m, const std::vector<Rational>& q) {
  std::vector<HighFloat> c;
  c.reserve(q.size());
  for (const auto& v : q) c.push_back(to_high(v));
  HighFloat grid = 0;
  for (int k = 0; k < m; ++k)
    grid = std::max<HighFloat>(grid, abs(clenshaw(c, HighFloat(2 * k) / m - 1)));
  return {grid, clenshaw(c, HighFloat(1))};
}

Candidate simplex_probe(int m, const Rational& eps, int d, const AndOptions& options) {
  // Scaled by 1/eps and with the exterior bounds folded into the objective:
  // feasible iff max q(m) over |q(k)| <= 1 (k < m) reaches (1 - eps) / eps.
  simplex::Problem pb;
  pb.rows = m;
  pb.cols = d + 1;
  for (int k = 0; k < m; ++k) {
    const auto row = chebyshev_row(m, k, d);
    pb.a.insert(pb.a.end(), row.begin(), row.end());
  }
  pb.lo.assign(static_cast<std::size_t>(m), -1.0);
  pb.hi.assign(static_cast<std::size_t>(m), 1.0);
  pb.objective = chebyshev_row(m, m, d);
  const auto res = simplex::maximize(pb);
  if (res.status != simplex::Status::Optimal)
    throw Error(ErrorCode::NumericalFailure, "bounded AND program reported as unbounded or infeasible");
  Candidate out;
  for (const auto& v : res.x) out.chebyshev.push_back(to_rational(v));
  const auto [grid, exterior] = evaluate_scaled(m, out.chebyshev);
  out.feasible = ratio_certified(exterior, grid, eps, options.tolerance);
  return out;
}

Candidate exchange_probe(int m, const Rational& eps, int d, const AndOptions& options) {
  exchange::SearchOptions so;
  so.log_target = log_of(target_ratio(eps));
  so.tolerance = static_cast<long double>(options.tolerance);
  so.exec = options.exec;
  const auto ext = exchange::exterior_extremum(m, d, so);
  Candidate out;
  const long double need = *so.log_target - so.tolerance;
  if (ext.log_lower >= need) {
    out.feasible = true;
    out.reference = ext.reference;
  } else if (ext.log_upper < need || ext.converged) {
    out.feasible = false;
    out.upper_reference = ext.upper_reference;
  } else {
    throw Error(ErrorCode::NumericalFailure,
                "exchange did not settle feasibility at m=" + std::to_string(m) + ", d=" + std::to_string(d));
  }
  return out;
}

Candidate probe(int m, const Rational& eps, int d, const AndOptions& options) {
  if (d >= m) {  // C(t, m) is exact
    Candidate exact;
    exact.feasible = true;
    return exact;
  }
  if (options.method == AndMethod::Simplex) return simplex_probe(m, eps, d, options);
  return exchange_probe(m, eps, d, options);
}

struct Search {
  int degree = 0;
  Candidate witness;
};

Search search(int m, const Rational& eps, const AndOptions& options) {
  check_epsilon(eps);
  check_and_size(m, options.allow_huge);
  // Geometric search: probe 0, 1, 2, 3, 4, 6, 9, ... until certified, then bisect.
  // Probes stay below 1.5 times the answer, where the coefficient LP is well
  // conditioned; feasibility is closed upward in d.
  Candidate best;
  best.feasible = true;
  std::vector<int> below;  // upper reference of the probe at the final lo - 1
  int lo = 0, hi = m;
  for (int d = 0; d < m; d += std::max(1, d / 2)) {
    auto c = probe(m, eps, d, options);
    if (c.feasible) {
      hi = d;
      best = std::move(c);
      break;
    }
    lo = d + 1;
    below = std::move(c.upper_reference);
  }
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    auto c = probe(m, eps, mid, options);
    if (c.feasible) {
      hi = mid;
      best = std::move(c);
    } else {
      lo = mid + 1;
      below = std::move(c.upper_reference);
    }
  }
  Search s{.degree = lo, .witness = std::move(best)};
  if (options.method == AndMethod::Exchange) {
    if (s.degree < m) {
      const auto hp = exchange::certify_reference(m, s.witness.reference, options.exec);
      if (!ratio_certified(hp.exterior, hp.grid_max, eps, options.tolerance))
        throw Error(ErrorCode::NumericalFailure,
                    "50-digit certification failed at degree " + std::to_string(s.degree));
    }
    // Any reference bounds M_{d-1}(m) from above by its L_S.
    if (s.degree > 0 && !below.empty() &&
        exchange::exterior_value_high(m, below) >= to_high(target_ratio(eps)))
      throw Error(ErrorCode::NumericalFailure,
                  "50-digit check could not confirm degree " + std::to_string(s.degree - 1) + " infeasible");
  }
  return s;
}

// Chebyshev coefficients of the degree-d interpolant through 50-digit values
// at the Chebyshev-Lobatto nodes of [0, m].
std::vector<Rational> chebyshev_fit(int m, int d, const std::function<HighFloat(const HighFloat&)>& f) {
  if (d == 0) return {to_rational(f(HighFloat(m) / 2))};
  const HighFloat pi = boost::math::constants::pi<HighFloat>();
  std::vector<HighFloat> values(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    const HighFloat x = cos(pi * j / d);
    values[static_cast<std::size_t>(j)] = f((x + 1) * m / 2);
  }
  std::vector<Rational> c(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    HighFloat sum = 0;
    for (int j = 0; j <= d; ++j) {
      HighFloat term = values[static_cast<std::size_t>(j)] * cos(pi * j * k / d);
      if (j == 0 || j == d) term /= 2;
      sum += term;
    }
    sum = sum * 2 / d;
    if (k == 0 || k == d) sum /= 2;
    c[static_cast<std::size_t>(k)] = to_rational(sum);
  }
  return c;
}

}  // namespace

UnivariatePolynomial::UnivariatePolynomial(int m, std::vector<Rational> coefficients)
    : m_(m), c_(std::move(coefficients)) {
  if (m < 1) throw Error(ErrorCode::DomainError, "polynomial domain [0, m] needs m >= 1");
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
  if (c_.empty()) c_.push_back(0);
}

int UnivariatePolynomial::degree() const {
  return static_cast<int>(c_.size()) - 1;
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
  return clenshaw(c_, Rational(2 * t / m_ - 1));
}

HighFloat UnivariatePolynomial::evaluate(const HighFloat& t) const {
  std::vector<HighFloat> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(to_high(v));
  return clenshaw(c, HighFloat(2 * t / m_ - 1));
}

Rational UnivariatePolynomial::max_and_error() const {
  Rational worst = 0;
  for (int k = 0; k <= m_; ++k) {
    const Rational target = k == m_ ? 1 : 0;
    worst = std::max(worst, Rational(abs(evaluate(Rational(k)) - target)));
  }
  return worst;
}

UnivariatePolynomial exact_and_polynomial(int m) {
  // prod_{i<m} (t - i) / m!, with t = m (x + 1) / 2.
  std::vector<Rational> c{Rational(1)};
  Rational factorial = 1;
  for (int i = 0; i < m; ++i) {
    auto shifted = times_x(c);
    for (auto& v : shifted) v *= Rational(m, 2);
    c.push_back(0);
    for (std::size_t j = 0; j < c.size(); ++j) shifted[j] += c[j] * (Rational(m, 2) - i);
    c = std::move(shifted);
    factorial *= i + 1;
  }
  for (auto& v : c) v /= factorial;
  return UnivariatePolynomial(m, std::move(c));
}

Rational epsilon_prime(int n, const Rational& epsilon) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be positive");
  check_epsilon(epsilon);
  const cpp_int den = (cpp_int(1) << (2 * n)) * pow(cpp_int(n + 2), static_cast<unsigned>(2 * n + 2));
  return epsilon / Rational(den);
}

bool in_and_regime(int m, const Rational& epsilon) {
  if (epsilon <= 0 || epsilon > Rational(1, 3)) return false;
  return -log2_rational(epsilon) <= m * std::log2(static_cast<double>(m));
}

bool in_bpm_regime(int n, const Rational& epsilon) { return in_and_regime(n, epsilon); }

bool and_degree_feasible(int m, const Rational& epsilon, int d, const AndOptions& options) {
  check_epsilon(epsilon);
  check_and_size(m, options.allow_huge);
  if (d < 0) return false;
  return probe(m, epsilon, d, options).feasible;
}

int min_and_approx_degree(int m, const Rational& epsilon, const AndOptions& options) {
  return search(m, epsilon, options).degree;
}

UnivariatePolynomial build_and_approximant(int m, const Rational& epsilon, const AndOptions& options) {
  const auto s = search(m, epsilon, options);
  if (s.degree >= m) return exact_and_polynomial(m);
  std::vector<Rational> c;
  if (options.method == AndMethod::Simplex) {
    const auto [grid, exterior] = evaluate_scaled(m, s.witness.chebyshev);
    const Rational scale = 1 / (to_rational(grid) + to_rational(exterior));
    for (const auto& v : s.witness.chebyshev) c.push_back(v * scale);
  } else {
    const auto& ref = s.witness.reference;
    const auto hp = exchange::certify_reference(m, ref, options.exec);
    const HighFloat scale = 1 / (hp.exterior + hp.grid_max);
    c = chebyshev_fit(m, s.degree, [&](const HighFloat& t) {
      return exchange::reference_value_high(m, ref, t) * scale;
    });
  }
  UnivariatePolynomial p(m, std::move(c));
  const Rational slack = epsilon * (1 + Rational(std::llround(options.tolerance * 1e15), 1000000000000000LL));
  if (p.max_and_error() > slack)
    throw Error(ErrorCode::NumericalFailure, "AND witness failed its exact re-check");
  return p;
}

DegreeBoundReport bpm_degree_bound(int n, const Rational& epsilon, kernels::Exec exec) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be positive");
  require_size(n <= limits::kMaxBoundSide,
               "bpm_degree_bound needs n <= " + std::to_string(limits::kMaxBoundSide));
  DegreeBoundReport r;
  r.n = n;
  r.epsilon = epsilon;
  r.epsilon_prime = epsilon_prime(n, epsilon);
  r.log2_epsilon_prime = log2_rational(r.epsilon_prime);
  const long long cube = static_cast<long long>(n) * n * n;
  while (static_cast<long long>(r.threshold) * r.threshold < cube) ++r.threshold;
  const int m = n * n;
  AndOptions options;
  options.allow_huge = true;
  options.exec = exec;
  r.and_degree = min_and_approx_degree(m, r.epsilon_prime, options);
  r.overall_bound = std::max(r.threshold, r.and_degree);
  r.epsilon_in_regime = in_bpm_regime(n, epsilon);
  r.epsilon_prime_in_regime = in_and_regime(m, r.epsilon_prime);
  return r;
}

std::string report_tsv(const DegreeBoundReport& r) {
  std::ostringstream out;
  out << "n\teps\teps_prime_log2\tthreshold\tand_degree\tbound\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r.log2_epsilon_prime);
  out << r.n << '\t' << format_rational(r.epsilon) << '\t' << buf << '\t' << r.threshold << '\t'
      << r.and_degree << '\t' << r.overall_bound << '\n';
  return out.str();
}

std::string report_json(const DegreeBoundReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["eps"] = format_rational(r.epsilon);
  j["eps_prime"] = format_rational(r.epsilon_prime);
  j["eps_prime_log2"] = r.log2_epsilon_prime;
  j["threshold"] = r.threshold;
  j["and_degree"] = r.and_degree;
  j["bound"] = r.overall_bound;
  j["eps_in_regime"] = r.epsilon_in_regime;
  j["eps_prime_in_regime"] = r.epsilon_prime_in_regime;
  return j.dump(2) + "\n";
}

MultilinearPolynomial::MultilinearPolynomial(int variables) : vars_(variables) {
  if (variables < 0 || variables > 64)
    throw Error(ErrorCode::DomainError, "multilinear polynomials support 0..64 variables");
}

void MultilinearPolynomial::add(std::uint64_t monomial, const Rational& c) {
  if (vars_ < 64 && (monomial >> vars_) != 0)
    throw Error(ErrorCode::DimensionMismatch, "monomial uses a variable out of range");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(monomial, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultilinearPolynomial::coefficient(std::uint64_t monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultilinearPolynomial::degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, std::popcount(mono));
  return d;
}

Rational MultilinearPolynomial::evaluate(std::uint64_t point) const {
  Rational sum = 0;
  for (const auto& [mono, c] : terms_)
    if ((mono & point) == mono) sum += c;
  return sum;
}

MultilinearPolynomial dualize_polynomial(const MultilinearPolynomial& p) {
  // p(1 - x) = sum_S c_S prod_{i in S} (1 - x_i) = sum_S c_S sum_{T subset S} (-1)^{|T|} x^T.
  MultilinearPolynomial out(p.variables());
  out.add(0, 1);
  for (const auto& [s, c] : p.terms()) {
    for (std::uint64_t t = s;; t = (t - 1) & s) {
      out.add(t, std::popcount(t) % 2 == 0 ? Rational(-c) : c);
      if (t == 0) break;
    }
  }
  return out;
}

AssembledApproximant assemble_bpm_approximant(int n, const Rational& epsilon) {
  require_size(n >= 1 && n <= limits::kMaxAssembleSide,
               "assemble_bpm_approximant certifies 2^{n^2} inputs; n must be <= " +
                   std::to_string(limits::kMaxAssembleSide));
  check_epsilon(epsilon);
  const int vars = n * n;
  AssembledApproximant a;
  a.n = n;
  a.epsilon = epsilon;
  a.epsilon_prime = epsilon_prime(n, epsilon);
  const long long cube = static_cast<long long>(n) * n * n;
  while (static_cast<long long>(a.threshold) * a.threshold < cube) ++a.threshold;

  std::map<int, std::vector<Rational>> differences;  // size -> finite differences of p_size at 0
  MultilinearPolynomial poly(vars);
  const DualPolynomial exact = materialize(n);
  for (const auto& [mask, coeff] : exact.terms()) {
    const Rational weight(coeff);
    const int size = std::popcount(mask);
    if (size < a.threshold) {
      poly.add(mask, weight);
      ++a.exact_terms;
      continue;
    }
    ++a.approximated_terms;
    auto it = differences.find(size);
    if (it == differences.end()) {
      const auto p = build_and_approximant(size, a.epsilon_prime);
      a.and_degrees[size] = p.degree();
      std::vector<Rational> diff(static_cast<std::size_t>(size + 1));
      for (int j = 0; j <= size; ++j) {
        Rational acc = 0;
        for (int i = 0; i <= j; ++i) {
          const Rational term = Rational(binomial(j, i)) * p.evaluate(Rational(i));
          acc += (j - i) % 2 == 0 ? term : Rational(-term);
        }
        diff[static_cast<std::size_t>(j)] = acc;
      }
      it = differences.emplace(size, std::move(diff)).first;
    }
    // p(sum_{e in G} x_e) on Boolean points, expanded over subsets of G.
    for (std::uint64_t t = mask;; t = (t - 1) & mask) {
      poly.add(t, weight * it->second[static_cast<std::size_t>(std::popcount(t))]);
      if (t == 0) break;
    }
  }
  a.polynomial = poly;
  a.dual = dualize_polynomial(poly);
  a.degree = poly.degree();
  const std::uint64_t inputs = std::uint64_t{1} << vars;
  for (std::uint64_t x = 0; x < inputs; ++x) {
    const auto g = BipartiteGraph::from_mask(n, x);
    const bool pm = has_perfect_matching(g);
    const Rational star = has_perfect_matching(complement(g)) ? 0 : 1;
    a.max_error = std::max(a.max_error, Rational(abs(poly.evaluate(x) - star)));
    a.dual_max_error = std::max(a.dual_max_error, Rational(abs(a.dual.evaluate(x) - (pm ? 1 : 0))));
  }
  if (a.max_error > epsilon || a.dual_max_error > epsilon)
    throw Error(ErrorCode::NumericalFailure, "assembled approximant exceeds epsilon on some input");
  return a;
}

}  // namespace bpm
