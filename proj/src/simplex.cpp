#include "bpm/simplex.hpp"

#include <cmath>
#include <limits>

#include "bpm/error.hpp"

namespace bpm::simplex {

namespace {

constexpr double kPivotEps = 1e-10;
constexpr int kDegenerateBeforeBland = 30;

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), t_(static_cast<std::size_t>(rows + 1) * static_cast<std::size_t>(cols + 1), 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& at(int r, int c) { return t_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_ + 1) + static_cast<std::size_t>(c)]; }
  double& rhs(int r) { return at(r, cols_); }
  // Row `rows_` holds reduced costs; its rhs is minus the objective value.
  double& cost(int c) { return at(rows_, c); }

  void pivot(int pr, int pc) {
    const double p = at(pr, pc);
    for (int c = 0; c <= cols_; ++c) at(pr, c) /= p;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0;
    }
  }

 private:
  int rows_, cols_;
  std::vector<double> t_;
};

// Runs simplex iterations over columns [0, usable). Returns false if unbounded.
bool iterate(Tableau& t, std::vector<int>& basis, int usable, int max_pivots, int& pivots) {
  int degenerate = 0;
  while (true) {
    const bool bland = degenerate >= kDegenerateBeforeBland;
    int enter = -1;
    double best = -kPivotEps;
    for (int c = 0; c < usable; ++c) {
      if (t.cost(c) < best) {
        enter = c;
        if (bland) break;
        best = t.cost(c);
      }
    }
    if (enter < 0) return true;
    int leave = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < t.rows(); ++r) {
      const double v = t.at(r, enter);
      if (v <= kPivotEps) continue;
      const double q = t.rhs(r) / v;
      if (leave < 0) {
        ratio = q;
        leave = r;
        continue;
      }
      const double slack = 1e-12 * std::max(1.0, std::fabs(ratio));
      if (q < ratio - slack ||
          (q <= ratio + slack && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
        ratio = q;
        leave = r;
      }
    }
    if (leave < 0) return false;
    degenerate = ratio <= 1e-12 ? degenerate + 1 : 0;
    t.pivot(leave, enter);
    basis[static_cast<std::size_t>(leave)] = enter;
    if (++pivots > max_pivots) throw Error(ErrorCode::NumericalFailure, "simplex pivot limit reached");
  }
}

std::vector<HighFloat> solve_square(std::vector<std::vector<HighFloat>> m) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (abs(m[i][c]) > abs(m[p][c])) p = i;
    std::swap(m[c], m[p]);
    if (m[c][c] == 0) throw Error(ErrorCode::NumericalFailure, "singular active set");
    for (std::size_t i = c + 1; i < n; ++i) {
      const HighFloat f = m[i][c] / m[c][c];
      if (f == 0) continue;
      for (std::size_t k = c; k <= n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  std::vector<HighFloat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    HighFloat s = m[i][n];
    for (std::size_t k = i + 1; k < n; ++k) s -= m[i][k] * x[k];
    x[i] = s / m[i][i];
  }
  return x;
}

}  // namespace

Result maximize(const Problem& pb, int max_pivots) {
  const auto rows = static_cast<std::size_t>(pb.rows);
  const auto cols = static_cast<std::size_t>(pb.cols);
  if (pb.a.size() != rows * cols || pb.lo.size() != rows || pb.hi.size() != rows ||
      pb.objective.size() != cols)
    throw Error(ErrorCode::DimensionMismatch, "simplex problem dimensions disagree");

  // Dual columns: u_r (0..rows-1), v_r (rows..2rows-1), artificials after.
  const int nr = pb.cols;
  const int structural = 2 * pb.rows;
  const int total = structural + nr;
  Tableau t(nr, total);
  std::vector<int> basis(static_cast<std::size_t>(nr));
  for (int j = 0; j < nr; ++j) {
    const double sign = pb.objective[static_cast<std::size_t>(j)] < 0 ? -1.0 : 1.0;
    for (int r = 0; r < pb.rows; ++r) {
      const double v = pb.a[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(j)] * sign;
      t.at(j, r) = v;
      t.at(j, pb.rows + r) = -v;
    }
    t.at(j, structural + j) = 1.0;
    t.rhs(j) = pb.objective[static_cast<std::size_t>(j)] * sign;
    basis[static_cast<std::size_t>(j)] = structural + j;
  }
  Result result;
  // Phase one: minimise the sum of artificials.
  for (int j = 0; j < nr; ++j)
    for (int c = 0; c <= total; ++c)
      if (c < structural || c == total) t.cost(c) -= t.at(j, c);
  iterate(t, basis, structural, max_pivots, result.pivots);
  if (-t.rhs(nr) > 1e-9 * (1.0 + std::fabs(t.rhs(nr)))) {
    result.status = Status::Unbounded;  // dual infeasible
    return result;
  }
  // Pivot remaining artificials out where possible.
  for (int j = 0; j < nr; ++j) {
    if (basis[static_cast<std::size_t>(j)] < structural) continue;
    int best = -1;
    for (int c = 0; c < structural; ++c)
      if (best < 0 || std::fabs(t.at(j, c)) > std::fabs(t.at(j, best))) best = c;
    if (best >= 0 && std::fabs(t.at(j, best)) > kPivotEps) {
      t.pivot(j, best);
      basis[static_cast<std::size_t>(j)] = best;
    }
  }
  // Phase two costs, reduced against the current basis.
  for (int c = 0; c <= total; ++c) t.cost(c) = 0;
  for (int r = 0; r < pb.rows; ++r) {
    t.cost(r) = pb.hi[static_cast<std::size_t>(r)];
    t.cost(pb.rows + r) = -pb.lo[static_cast<std::size_t>(r)];
  }
  for (int j = 0; j < nr; ++j) {
    const int b = basis[static_cast<std::size_t>(j)];
    const double cb = b < structural ? t.cost(b) : 0.0;
    if (cb == 0) continue;
    for (int c = 0; c <= total; ++c) t.cost(c) -= cb * t.at(j, c);
  }
  if (!iterate(t, basis, structural, max_pivots, result.pivots)) {
    result.status = Status::Infeasible;  // dual unbounded
    return result;
  }
  result.status = Status::Optimal;
  result.value = -t.rhs(nr);

  // Complementary slackness: a basic u_r or v_r marks row r tight at hi or lo.
  std::vector<std::vector<HighFloat>> system;
  for (int j = 0; j < nr; ++j) {
    const int b = basis[static_cast<std::size_t>(j)];
    if (b >= structural) throw Error(ErrorCode::NumericalFailure, "artificial column left in the basis");
    const bool upper = b < pb.rows;
    const int r = upper ? b : b - pb.rows;
    result.active_rows.push_back(r);
    result.at_upper.push_back(upper);
    std::vector<HighFloat> eq(cols + 1);
    for (std::size_t c = 0; c < cols; ++c) eq[c] = pb.a[static_cast<std::size_t>(r) * cols + c];
    eq[cols] = upper ? pb.hi[static_cast<std::size_t>(r)] : pb.lo[static_cast<std::size_t>(r)];
    system.push_back(std::move(eq));
  }
  result.x = solve_square(std::move(system));
  return result;
}

}  // namespace bpm::simplex
