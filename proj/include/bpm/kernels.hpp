#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bpm::kernels {

// Every data-parallel kernel has a serial reference next to the OpenMP
// version; tests check that both agree bit for bit.
enum class Exec { Serial, Parallel };

// f[mask] = 1 iff the complement of the graph with that row-major edge mask
// has no perfect matching. Size 2^{n*n}.
std::vector<std::int32_t> bpm_star_truth_table(int n, Exec exec);

// In-place subset transforms over a 2^dims table.
// Mobius: a[S] = sum_{T subset S} (-1)^{|S \ T|} f[T]. Zeta is its inverse.
void mobius_transform(std::span<std::int32_t> values, Exec exec);
void zeta_transform(std::span<std::int32_t> values, Exec exec);

// Closed-form coefficient of every labeled graph, saturated to int32 (all
// values at n <= 5 fit: |a| <= 2^{2n}).
std::vector<std::int32_t> formula_table(int n, Exec exec);

// Index of the first mismatch between two tables, or -1.
std::int64_t first_mismatch(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
                            Exec exec);

int max_threads();

}  // namespace bpm::kernels
