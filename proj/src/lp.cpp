#include "invcover/lp.hpp"

#include "invcover/error.hpp"

namespace invcover::lp {

Solution solve_packing(const PackingProblem &problem) {
  const std::size_t rows = problem.capacity.size();
  const std::size_t cols = problem.objective.size();
  if (problem.matrix.size() != rows) {
    fail(ErrorCode::InvalidArgument, "matrix row count differs from capacity length");
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (problem.matrix[i].size() != cols) {
      fail(ErrorCode::InvalidArgument, "matrix column count differs from objective length");
    }
    if (sgn(problem.capacity[i]) < 0) {
      fail(ErrorCode::InvalidArgument, "packing capacities must be nonnegative");
    }
  }

  // Columns [0, cols) are structural, [cols, cols + rows) are slacks.
  const std::size_t width = cols + rows;
  std::vector<std::vector<Rational>> tableau(rows, std::vector<Rational>(width));
  std::vector<Rational> rhs = problem.capacity;
  std::vector<Rational> reduced(width);
  std::vector<std::size_t> basis(rows);
  Rational value = 0;

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) tableau[i][j] = problem.matrix[i][j];
    tableau[i][cols + i] = 1;
    basis[i] = cols + i;
  }
  for (std::size_t j = 0; j < cols; ++j) reduced[j] = -problem.objective[j];

  Solution solution;
  while (true) {
    std::size_t entering = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(reduced[j]) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(tableau[i][entering]) <= 0) continue;
      Rational ratio = rhs[i] / tableau[i][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == rows) fail(ErrorCode::InvariantViolation, "packing LP is unbounded");

    const Rational pivot = tableau[leaving][entering];
    for (auto &x : tableau[leaving]) x /= pivot;
    rhs[leaving] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leaving || sgn(tableau[i][entering]) == 0) continue;
      const Rational factor = tableau[i][entering];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(tableau[leaving][j]) != 0) tableau[i][j] -= factor * tableau[leaving][j];
      }
      rhs[i] -= factor * rhs[leaving];
    }
    const Rational factor = reduced[entering];
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(tableau[leaving][j]) != 0) reduced[j] -= factor * tableau[leaving][j];
    }
    value -= factor * rhs[leaving];
    basis[leaving] = entering;
    ++solution.pivots;
  }

  solution.value = value;
  solution.primal.assign(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) solution.primal[basis[i]] = rhs[i];
  }
  solution.dual.assign(reduced.begin() + static_cast<long>(cols), reduced.end());
  return solution;
}

}  // namespace invcover::lp
