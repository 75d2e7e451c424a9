#pragma once

#include <vector>

#include "bpm/numeric.hpp"

namespace bpm::simplex {

// maximize c.x subject to lo <= A x <= hi, x free. A is row-major rows x cols
// with full column rank. Solved as the dual standard-form program
//   min hi.u - lo.v  s.t.  A^T (u - v) = c,  u, v >= 0
// by two-phase dense simplex; the tableau has only cols + 1 rows.
struct Problem {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<double> objective;
};

enum class Status { Optimal, Unbounded, Infeasible };

struct Result {
  Status status = Status::Infeasible;
  // Primal vertex re-solved at 50 digits from the active constraints of the
  // final basis (row index, and whether it is tight at hi).
  std::vector<HighFloat> x;
  std::vector<int> active_rows;
  std::vector<bool> at_upper;
  double value = 0;  // tableau optimum, double precision
  int pivots = 0;
};

Result maximize(const Problem& problem, int max_pivots = 100000);

}  // namespace bpm::simplex
