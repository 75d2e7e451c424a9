#include "bpm/coeff.hpp"

#include <cassert>

namespace bpm {

Coefficient binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Coefficient result = 1;
  for (long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

Coefficient f_factor(long n, long d, long k) {
  if (d <= 0) return binomial(n - 1, k);
  return -binomial(n - d - 1, k - d) * binomial(k - 1, d - 1);
}

Coefficient block_coefficient(const Block& block) {
  return f_factor(block.n, block.d, block.k);
}

Coefficient dual_coefficient(const RepresentingSequence& s) {
  const int t = s.length();
  const int n = s.n();
  Coefficient result = binomial(n - s.k(t - 1) - 1, n - s.d(t));
  for (int i = 1; i < t && result != 0; ++i) {
    const int base = s.k(i - 1);
    result *= f_factor(s.d(i + 1) - base, s.d(i) - base, s.k(i) - base);
  }
  assert(abs(result) <= (Coefficient(1) << (2 * n)));
  return result;
}

Coefficient dual_coefficient(const BipartiteGraph& g) {
  if (!is_totally_ordered(g)) return 0;
  return dual_coefficient(representing_sequence(canonical_sort(g).sorted));
}

Coefficient coefficient_from_blocks(const BlockDecomposition& decomposition) {
  Coefficient result = binomial(decomposition.final_top, decomposition.final_bottom);
  for (const Block& b : decomposition.blocks) result *= block_coefficient(b);
  return result;
}

}  // namespace bpm
