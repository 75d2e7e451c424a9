#include "bpm/polyspace.hpp"

#include <algorithm>
#include <cmath>

namespace bpm {

namespace {

void check_sequence_side(int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be positive");
  require_size(n <= limits::kMaxSequenceSide,
               "sequence enumeration grows like 4^n; n must be <= " +
                   std::to_string(limits::kMaxSequenceSide));
}

// All strictly increasing selections of `count` values from [lo, hi].
void choose(int lo, int hi, int count, std::vector<int>& current,
            std::vector<std::vector<int>>& out) {
  if (count == 0) {
    out.push_back(current);
    return;
  }
  for (int v = lo; v <= hi - count + 1; ++v) {
    current.push_back(v);
    choose(v + 1, hi, count - 1, current, out);
    current.pop_back();
  }
}

Coefficient factorial(int n) {
  Coefficient f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Coefficient multinomial(int total, const std::vector<int>& parts) {
  Coefficient result = factorial(total);
  for (int p : parts) result /= factorial(p);
  return result;
}

}  // namespace

void for_each_sequence(int n, bool nonzero_only,
                       const std::function<void(const RepresentingSequence&)>& visit) {
  check_sequence_side(n);
  for (int t = 1; t <= n + 1; ++t) {
    std::vector<std::vector<int>> ds;
    std::vector<std::vector<int>> ks;
    std::vector<int> scratch;
    choose(0, n, t, scratch, ds);
    choose(1, n - 1, t - 1, scratch, ks);
    std::vector<RepresentingSequence> batch;
    for (const auto& d : ds)
      for (const auto& k : ks) {
        std::vector<RepresentingSequence::Pair> pairs(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) {
          pairs[static_cast<std::size_t>(i)].d = d[static_cast<std::size_t>(i)];
          pairs[static_cast<std::size_t>(i)].k = i + 1 < t ? k[static_cast<std::size_t>(i)] : n;
        }
        batch.emplace_back(n, std::move(pairs));
      }
    std::sort(batch.begin(), batch.end());
    for (const auto& s : batch)
      if (!nonzero_only || dual_coefficient(s) != 0) visit(s);
  }
}

std::vector<RepresentingSequence> enumerate_sequences(int n, bool nonzero_only) {
  std::vector<RepresentingSequence> out;
  for_each_sequence(n, nonzero_only, [&](const RepresentingSequence& s) { out.push_back(s); });
  return out;
}

Coefficient labeled_count(const RepresentingSequence& s) {
  const int t = s.length();
  std::vector<int> row_runs;
  std::vector<int> column_groups;
  for (int i = 1; i <= t; ++i) row_runs.push_back(s.k(i) - s.k(i - 1));
  column_groups.push_back(s.d(1));
  for (int i = 1; i <= t; ++i) column_groups.push_back(s.d(i + 1) - s.d(i));
  return multinomial(s.n(), row_runs) * multinomial(s.n(), column_groups);
}

Coefficient monomial_count(int n) {
  Coefficient total = 0;
  for_each_sequence(n, true, [&](const RepresentingSequence& s) { total += labeled_count(s); });
  return total;
}

Coefficient max_abs_coefficient(int n) {
  Coefficient best = 0;
  for_each_sequence(n, true, [&](const RepresentingSequence& s) {
    best = std::max<Coefficient>(best, abs(dual_coefficient(s)));
  });
  return best;
}

DualPolynomial materialize(int n) {
  require_size(n >= 1 && n <= limits::kMaxMaterializeSide,
               "materialize scans 2^{n^2} edge sets; n must be <= " +
                   std::to_string(limits::kMaxMaterializeSide));
  DualPolynomial poly(n);
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    poly.add(mask, dual_coefficient(BipartiteGraph::from_mask(n, mask)));
  return poly;
}

Coefficient evaluate(const DualPolynomial& p, const BipartiteGraph& x) { return p.evaluate(x); }

bool CountReport::monomial_bounds_hold() const {
  return monomial_lower <= monomials && monomials <= monomial_upper;
}

bool CountReport::magnitude_bounds_hold() const {
  return magnitude_lower <= max_abs && max_abs <= magnitude_upper;
}

CountReport count_report(int n) {
  check_sequence_side(n);
  CountReport r;
  r.n = n;
  for_each_sequence(n, true, [&](const RepresentingSequence& s) {
    r.monomials += labeled_count(s);
    r.max_abs = std::max<Coefficient>(r.max_abs, abs(dual_coefficient(s)));
  });
  const Coefficient nf = factorial(n);
  r.monomial_lower = nf * nf;
  r.monomial_upper = pow(Coefficient(n + 2), static_cast<unsigned>(2 * n + 2));
  r.magnitude_upper = Coefficient(1) << (2 * n);
  r.magnitude_lower = binomial(n - 1, n / 2);
  if (n >= 2) {
    const double log2_count = std::log2(r.monomials.convert_to<double>());
    r.growth_exponent_ratio = log2_count / (2.0 * n * std::log2(static_cast<double>(n)));
  }
  return r;
}

}  // namespace bpm
