#include "bpm/exchange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bpm/error.hpp"

namespace bpm::exchange {

namespace {

void check_reference(int m, std::span<const int> reference) {
  if (reference.empty()) throw Error(ErrorCode::DomainError, "empty reference");
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (reference[i] < 0 || reference[i] >= m)
      throw Error(ErrorCode::DomainError, "reference point outside [0, m-1]");
    if (i > 0 && reference[i] <= reference[i - 1])
      throw Error(ErrorCode::DomainError, "reference must be strictly increasing");
  }
}

// Quantiles of the constrained equilibrium density of d+1 points among m
// grid points: with c = (d+1)/m and r = sqrt(1 - c^2) on [-1, 1], the density
// is arctan(c / sqrt(r^2 - x^2)) / (pi c) for |x| < r and saturates at one
// point per cell outside. For small c this is the Chebyshev density.
std::vector<int> initial_reference(int m, int degree) {
  const int count = degree + 1;
  const long double c = static_cast<long double>(count) / m;
  const long double r2 = std::max(0.0L, 1.0L - c * c);
  const long double pi = std::numbers::pi_v<long double>;
  std::vector<long double> mass(static_cast<std::size_t>(m));
  long double total = 0;
  for (int k = 0; k < m; ++k) {
    const long double x = (2.0L * k + 1.0L) / m - 1.0L;
    const long double gap = r2 - x * x;
    const long double density = gap > 0 ? std::atan(c / std::sqrt(gap)) / (pi * c) : 1.0L / (2.0L * c);
    mass[static_cast<std::size_t>(k)] = density;
    total += density;
  }
  std::vector<int> s(static_cast<std::size_t>(count));
  long double cumulative = 0;
  int k = 0;
  for (int i = 0; i < count; ++i) {
    const long double target = (i + 0.5L) / count * total;
    while (k < m - 1 && cumulative + mass[static_cast<std::size_t>(k)] < target) cumulative += mass[static_cast<std::size_t>(k++)];
    s[static_cast<std::size_t>(i)] = k;
  }
  for (int i = 1; i < count; ++i)
    s[static_cast<std::size_t>(i)] = std::max(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i - 1)] + 1);
  for (int i = count - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = std::min(s[static_cast<std::size_t>(i)], m - count + i);
    if (i + 1 < count)
      s[static_cast<std::size_t>(i)] = std::min(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)] - 1);
  }
  return s;
}

std::vector<long double> log_table(int m) {
  std::vector<long double> lg(static_cast<std::size_t>(m + 1), 0.0L);
  for (int i = 1; i <= m; ++i) lg[static_cast<std::size_t>(i)] = std::log(static_cast<long double>(i));
  return lg;
}

long double log_sum_exp(const std::vector<long double>& v) {
  const long double top = *std::max_element(v.begin(), v.end());
  long double sum = 0;
  for (long double x : v) sum += std::exp(x - top);
  return top + std::log(sum);
}

// Sign-run maxima of e, reduced to exactly `count` alternating points.
std::vector<int> next_reference(const std::vector<long double>& e, int count) {
  std::vector<int> pts;
  for (int k = 0; k < static_cast<int>(e.size()); ++k) {
    const long double v = e[static_cast<std::size_t>(k)];
    if (v == 0) continue;
    if (pts.empty() || (v > 0) != (e[static_cast<std::size_t>(pts.back())] > 0)) {
      pts.push_back(k);
    } else if (std::fabs(v) > std::fabs(e[static_cast<std::size_t>(pts.back())])) {
      pts.back() = k;
    }
  }
  auto mag = [&](int k) { return std::fabs(e[static_cast<std::size_t>(k)]); };
  while (static_cast<int>(pts.size()) > count) {
    const int excess = static_cast<int>(pts.size()) - count;
    if (excess == 1) {
      if (mag(pts.front()) < mag(pts.back()))
        pts.erase(pts.begin());
      else
        pts.pop_back();
      continue;
    }
    std::size_t low = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (mag(pts[i]) < mag(pts[low])) low = i;
    if (low == 0 || low + 1 == pts.size()) {
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(low));
      continue;
    }
    // Dropping an interior point leaves two same-signed neighbours; keep the larger.
    const std::size_t weaker = mag(pts[low - 1]) < mag(pts[low + 1]) ? low - 1 : low + 1;
    const std::size_t first = std::min(low, weaker);
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(first),
              pts.begin() + static_cast<std::ptrdiff_t>(first + 2));
  }
  return pts;
}

}  // namespace

Weights reference_weights(int m, std::span<const int> reference) {
  check_reference(m, reference);
  const auto lg = log_table(m);
  const std::size_t n = reference.size();
  Weights w;
  w.log_abs.assign(n, 0.0L);
  for (std::size_t i = 0; i < n; ++i) {
    long double acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) acc -= lg[static_cast<std::size_t>(std::abs(reference[i] - reference[j]))];
    w.log_abs[i] = acc;
  }
  for (int s : reference) w.log_node_product += lg[static_cast<std::size_t>(m - s)];
  return w;
}

long double log_exterior_value(int m, std::span<const int> reference) {
  const auto w = reference_weights(m, reference);
  std::vector<long double> terms(reference.size());
  for (std::size_t i = 0; i < reference.size(); ++i)
    terms[i] = w.log_abs[i] - std::log(static_cast<long double>(m - reference[i]));
  return w.log_node_product + log_sum_exp(terms);
}

std::vector<long double> reference_values(int m, std::span<const int> reference,
                                          kernels::Exec exec) {
  const auto w = reference_weights(m, reference);
  const std::size_t n = reference.size();
  const long double top = *std::max_element(w.log_abs.begin(), w.log_abs.end());
  // Signed weight w_i has sign (-1)^{d-i}, matching the target sign on s_i,
  // so the numerator weights are all positive.
  std::vector<long double> abs_w(n), signed_w(n);
  for (std::size_t i = 0; i < n; ++i) {
    abs_w[i] = std::exp(w.log_abs[i] - top);
    signed_w[i] = ((n - 1 - i) % 2 == 0) ? abs_w[i] : -abs_w[i];
  }
  std::vector<int> node_of(static_cast<std::size_t>(m), -1);
  for (std::size_t i = 0; i < n; ++i) node_of[static_cast<std::size_t>(reference[i])] = static_cast<int>(i);

  std::vector<long double> out(static_cast<std::size_t>(m));
  auto eval = [&](int k) {
    const int node = node_of[static_cast<std::size_t>(k)];
    if (node >= 0) return ((n - 1 - static_cast<std::size_t>(node)) % 2 == 0) ? 1.0L : -1.0L;
    long double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const long double inv = 1.0L / static_cast<long double>(k - reference[i]);
      num += abs_w[i] * inv;
      den += signed_w[i] * inv;
    }
    return num / den;
  };
  if (exec == kernels::Exec::Serial) {
    for (int k = 0; k < m; ++k) out[static_cast<std::size_t>(k)] = eval(k);
  } else {
#pragma omp parallel for schedule(static)
    for (int k = 0; k < m; ++k) out[static_cast<std::size_t>(k)] = eval(k);
  }
  return out;
}

ExteriorExtremum exterior_extremum(int m, int degree, const SearchOptions& options) {
  if (m < 1) throw Error(ErrorCode::DomainError, "m must be positive");
  if (degree < 0 || degree >= m)
    throw Error(ErrorCode::DomainError, "exterior_extremum needs 0 <= degree < m");
  ExteriorExtremum best;
  best.m = m;
  best.degree = degree;
  best.log_lower = -std::numeric_limits<long double>::infinity();
  best.log_upper = std::numeric_limits<long double>::infinity();

  std::vector<int> reference = initial_reference(m, degree);
  std::vector<int> previous;
  for (int it = 1; it <= options.max_iterations; ++it) {
    best.iterations = it;
    const long double log_l = log_exterior_value(m, reference);
    const auto values = reference_values(m, reference, options.exec);
    long double peak = 0;
    for (long double v : values) peak = std::max(peak, std::fabs(v));
    if (!std::isfinite(peak) || !std::isfinite(log_l))
      throw Error(ErrorCode::NumericalFailure, "non-finite value in the exchange iteration");
    const long double log_lower = log_l - std::log(peak);
    if (log_l < best.log_upper) {
      best.log_upper = log_l;
      best.upper_reference = reference;
    }
    if (log_lower > best.log_lower) {
      best.log_lower = log_lower;
      best.reference = reference;
    }
    if (peak <= 1.0L + options.tolerance * 1e-3L) {
      best.converged = true;
      break;
    }
    if (options.log_target) {
      if (best.log_lower >= *options.log_target - options.tolerance) break;
      if (best.log_upper < *options.log_target - options.tolerance) break;
    }
    auto candidate = next_reference(values, degree + 1);
    if (candidate == reference || candidate == previous) {
      best.converged = best.log_upper - best.log_lower <= options.tolerance;
      break;
    }
    previous = std::move(reference);
    reference = std::move(candidate);
  }
  return best;
}

namespace {

std::vector<HighFloat> high_weights(std::span<const int> reference) {
  const std::size_t n = reference.size();
  std::vector<HighFloat> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    HighFloat prod = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) prod *= reference[i] - reference[j];
    w[i] = 1 / prod;
  }
  return w;
}

HighFloat first_kind(std::span<const int> reference, const std::vector<HighFloat>& w,
                     const HighFloat& t) {
  const std::size_t n = reference.size();
  HighFloat node_poly = 1;
  HighFloat sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const HighFloat diff = t - reference[i];
    if (diff == 0) return ((n - 1 - i) % 2 == 0) ? HighFloat(1) : HighFloat(-1);
    node_poly *= diff;
    const HighFloat term = w[i] / diff;
    sum += ((n - 1 - i) % 2 == 0) ? term : HighFloat(-term);
  }
  return node_poly * sum;
}

}  // namespace

HighFloat reference_value_high(int m, std::span<const int> reference, const HighFloat& t) {
  check_reference(m, reference);
  return first_kind(reference, high_weights(reference), t);
}

HighFloat exterior_value_high(int m, std::span<const int> reference) {
  check_reference(m, reference);
  return first_kind(reference, high_weights(reference), HighFloat(m));
}

HighReference certify_reference(int m, std::span<const int> reference, kernels::Exec exec) {
  check_reference(m, reference);
  const auto w = high_weights(reference);
  std::vector<HighFloat> grid(static_cast<std::size_t>(m));
  if (exec == kernels::Exec::Serial) {
    for (int k = 0; k < m; ++k) grid[static_cast<std::size_t>(k)] = abs(first_kind(reference, w, HighFloat(k)));
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (int k = 0; k < m; ++k) grid[static_cast<std::size_t>(k)] = abs(first_kind(reference, w, HighFloat(k)));
  }
  HighReference out;
  out.grid_max = *std::max_element(grid.begin(), grid.end());
  out.exterior = first_kind(reference, w, HighFloat(m));
  return out;
}

}  // namespace bpm::exchange
