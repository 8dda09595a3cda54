#ifndef INVCOVER_LP_HPP
#define INVCOVER_LP_HPP

#include "invcover/rational.hpp"

#include <cstddef>
#include <vector>

namespace invcover::lp {

// maximize    sum_j objective[j] * y[j]
// subject to  sum_j matrix[i][j] * y[j] <= capacity[i]   for every row i
//             y >= 0
//
// with capacity >= 0, so the origin is a feasible starting basis. The dual
//
// minimize    sum_i capacity[i] * x[i]
// subject to  sum_i matrix[i][j] * x[i] >= objective[j]  for every column j
//             x >= 0
//
// is read off the final tableau.
struct PackingProblem {
  std::vector<std::vector<Rational>> matrix;  // rows x columns
  std::vector<Rational> capacity;
  std::vector<Rational> objective;
};

struct Solution {
  Rational value;
  std::vector<Rational> primal;  // y, one per column
  std::vector<Rational> dual;    // x, one per row
  std::size_t pivots = 0;
};

// Dense tableau simplex in exact arithmetic with Bland's rule (smallest
// eligible index enters and leaves), so it terminates on degenerate input.
// Throws Error(InvalidArgument) on mis-shaped input or negative capacity and
// Error(InvariantViolation) if the problem is unbounded (impossible when every
// column with positive objective has a positive entry).
Solution solve_packing(const PackingProblem &problem);

}  // namespace invcover::lp

#endif
