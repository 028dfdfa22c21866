#pragma once

#include <Eigen/Dense>

namespace attn {

// max c'x  s.t.  A x = b,  x >= 0.
struct LinearProgram {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

struct LpSolution {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
};

// Dense two-phase tableau simplex with Bland's pivot rule, so runs are
// deterministic and cycling-free. Sized for the garbling oracle: a handful of
// rows, a few thousand columns. Throws InfeasibleLP when no feasible point
// exists and BadInput for malformed or unbounded programs.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace attn
