#include "bpm/kernels.hpp"

#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bpm/bigraph.hpp"
#include "bpm/coeff.hpp"

namespace bpm::kernels {

namespace {

std::int64_t table_size(int n) {
  if (n < 1 || n > 5) throw Error(ErrorCode::SizeLimit, "lattice tables need 1 <= n <= 5");
  return std::int64_t{1} << (n * n);
}

std::int32_t star_value(int n, std::uint64_t mask) {
  return has_perfect_matching(complement(BipartiteGraph::from_mask(n, mask))) ? 0 : 1;
}

std::int32_t formula_value(int n, std::uint64_t mask) {
  const Coefficient c = dual_coefficient(BipartiteGraph::from_mask(n, mask));
  return c.convert_to<std::int32_t>();
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::int32_t> bpm_star_truth_table(int n, Exec exec) {
  const std::int64_t size = table_size(n);
  std::vector<std::int32_t> f(static_cast<std::size_t>(size));
  if (exec == Exec::Serial) {
    for (std::int64_t s = 0; s < size; ++s)
      f[static_cast<std::size_t>(s)] = star_value(n, static_cast<std::uint64_t>(s));
    return f;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < size; ++s)
    f[static_cast<std::size_t>(s)] = star_value(n, static_cast<std::uint64_t>(s));
  return f;
}

void mobius_transform(std::span<std::int32_t> values, Exec exec) {
  const auto size = static_cast<std::int64_t>(values.size());
  for (std::int64_t bit = 1; bit < size; bit <<= 1) {
    // Entries with `bit` set only read entries with it clear, so each pass is
    // race-free.
    if (exec == Exec::Serial) {
      for (std::int64_t s = 0; s < size; ++s)
        if (s & bit) values[static_cast<std::size_t>(s)] -= values[static_cast<std::size_t>(s ^ bit)];
    } else {
#pragma omp parallel for schedule(static)
      for (std::int64_t s = 0; s < size; ++s)
        if (s & bit) values[static_cast<std::size_t>(s)] -= values[static_cast<std::size_t>(s ^ bit)];
    }
  }
}

void zeta_transform(std::span<std::int32_t> values, Exec exec) {
  const auto size = static_cast<std::int64_t>(values.size());
  for (std::int64_t bit = 1; bit < size; bit <<= 1) {
    if (exec == Exec::Serial) {
      for (std::int64_t s = 0; s < size; ++s)
        if (s & bit) values[static_cast<std::size_t>(s)] += values[static_cast<std::size_t>(s ^ bit)];
    } else {
#pragma omp parallel for schedule(static)
      for (std::int64_t s = 0; s < size; ++s)
        if (s & bit) values[static_cast<std::size_t>(s)] += values[static_cast<std::size_t>(s ^ bit)];
    }
  }
}

std::vector<std::int32_t> formula_table(int n, Exec exec) {
  const std::int64_t size = table_size(n);
  std::vector<std::int32_t> a(static_cast<std::size_t>(size));
  if (exec == Exec::Serial) {
    for (std::int64_t s = 0; s < size; ++s)
      a[static_cast<std::size_t>(s)] = formula_value(n, static_cast<std::uint64_t>(s));
    return a;
  }
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t s = 0; s < size; ++s)
    a[static_cast<std::size_t>(s)] = formula_value(n, static_cast<std::uint64_t>(s));
  return a;
}

std::int64_t first_mismatch(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                            Exec exec) {
  if (a.size() != b.size()) return 0;
  const auto size = static_cast<std::int64_t>(a.size());
  std::int64_t first = std::numeric_limits<std::int64_t>::max();
  if (exec == Exec::Serial) {
    for (std::int64_t s = 0; s < size; ++s)
      if (a[static_cast<std::size_t>(s)] != b[static_cast<std::size_t>(s)]) return s;
    return -1;
  }
#pragma omp parallel for reduction(min : first) schedule(static)
  for (std::int64_t s = 0; s < size; ++s)
    if (a[static_cast<std::size_t>(s)] != b[static_cast<std::size_t>(s)] && s < first) first = s;
  return first == std::numeric_limits<std::int64_t>::max() ? -1 : first;
}

}  // namespace bpm::kernels
