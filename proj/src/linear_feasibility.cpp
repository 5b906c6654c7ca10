#include "redlab/linear_feasibility.hpp"

#include <optional>

namespace redlab {

bool standard_form_feasible(const RationalMatrix& a, std::vector<Rational> b) {
  const std::size_t m = a.rows;
  const std::size_t n = a.cols;
  if (b.size() != m) throw DimensionError("right-hand side length mismatch");
  if (m == 0) return true;

  // Tableau columns: n structural, m artificial, 1 rhs.
  const std::size_t width = n + m + 1;
  RationalMatrix t(m, width);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    t(i, n + i) = 1;
    t(i, width - 1) = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }

  // Reduced costs of the phase-one objective: minimize the sum of artificials.
  std::vector<Rational> cost(width);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t(i, j);

  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] < 0) {
        entering = j;
        break;
      }
    }
    if (!entering) break;
    const std::size_t col = *entering;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, col) <= 0) continue;
      Rational ratio = t(i, width - 1) / t(i, col);
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (!leaving) break;
    const std::size_t row = *leaving;

    const Rational pivot = t(row, col);
    for (std::size_t j = 0; j < width; ++j) t(row, j) /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t(i, col) == 0) continue;
      const Rational f = t(i, col);
      for (std::size_t j = 0; j < width; ++j)
        if (t(row, j) != 0) t(i, j) -= f * t(row, j);
    }
    if (cost[col] != 0) {
      const Rational f = cost[col];
      for (std::size_t j = 0; j < width; ++j)
        if (t(row, j) != 0) cost[j] -= f * t(row, j);
    }
    basis[row] = col;
  }
  // cost[rhs] holds minus the optimal sum of artificials.
  return cost[width - 1] == 0;
}

bool in_upper_hull(std::span<const ExponentVector> points, const ExponentVector& e) {
  if (points.empty()) return false;
  const std::size_t d = e.size();
  const std::size_t g = points.size();
  // Variables: lambda_1..lambda_g, slack_1..slack_d.
  //   sum_j lambda_j p_j + s = e,   sum_j lambda_j = 1.
  RationalMatrix a(d + 1, g + d);
  std::vector<Rational> b(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      points[j].check_length(e);
      a(i, j) = points[j][i];
    }
    a(i, g + i) = 1;
    b[i] = e[i];
  }
  for (std::size_t j = 0; j < g; ++j) a(d, j) = 1;
  b[d] = 1;
  return standard_form_feasible(a, std::move(b));
}

}  // namespace redlab
