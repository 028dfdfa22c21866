#include "attn/lp.hpp"

#include <cmath>
#include <vector>

#include "attn/errors.hpp"

namespace attn {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr double kFeasibilityTol = 1e-8;
constexpr int kMaxIterations = 200000;

struct Tableau {
  Eigen::MatrixXd t;        // m rows of constraints, columns + rhs
  Eigen::VectorXd obj;      // reduced-cost row, one entry per column
  double obj_rhs = 0.0;
  std::vector<int> basis;   // basis[i] = column basic in row i
  int iterations = 0;

  int rows() const { return static_cast<int>(t.rows()); }
  int cols() const { return static_cast<int>(t.cols()) - 1; }
  double rhs(int i) const { return t(i, t.cols() - 1); }

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int i = 0; i < rows(); ++i) {
      if (i == row || t(i, col) == 0.0) continue;
      t.row(i) -= t(i, col) * t.row(row);
    }
    const double cost = obj[col];
    obj_rhs -= cost * rhs(row);
    obj -= cost * t.row(row).head(cols()).transpose();
    basis[row] = col;
  }

  // Bland's rule: smallest improving column, smallest basis index on ratio
  // ties. `eligible` masks columns that may enter (used to keep artificials
  // out in phase 2). Returns false at optimality.
  bool step(const std::vector<char>& eligible) {
    int entering = -1;
    for (int j = 0; j < cols(); ++j) {
      if (eligible[j] && obj[j] < -kReducedCostTol) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return false;

    int leaving = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < rows(); ++i) {
      if (t(i, entering) <= kPivotTol) continue;
      const double ratio = rhs(i) / t(i, entering);
      if (leaving < 0 || ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 &&
           basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) fail(Errc::BadInput, "linear program is unbounded");
    pivot(leaving, entering);
    if (++iterations > kMaxIterations)
      fail(Errc::BadInput, "simplex iteration limit exceeded");
    return true;
  }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.A.rows());
  const int n = static_cast<int>(lp.A.cols());
  if (lp.b.size() != m || lp.c.size() != n)
    fail(Errc::BadInput, "inconsistent LP dimensions");
  if (m == 0 || n == 0) fail(Errc::BadInput, "empty LP");

  Tableau tab;
  tab.t.resize(m, n + m + 1);
  tab.t.leftCols(n) = lp.A;
  tab.t.middleCols(n, m) = Eigen::MatrixXd::Identity(m, m);
  tab.t.col(n + m) = lp.b;
  for (int i = 0; i < m; ++i) {
    if (lp.b[i] < 0.0) tab.t.row(i) *= -1.0;
  }
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) tab.basis[i] = n + i;

  // Phase 1: minimize the sum of artificials. Reduced costs for the
  // artificial basis are -(column sums) on the original columns.
  tab.obj = Eigen::VectorXd::Zero(n + m);
  for (int j = 0; j < n; ++j) tab.obj[j] = -tab.t.col(j).sum();
  tab.obj_rhs = -tab.t.col(n + m).sum();

  std::vector<char> eligible(n + m, 1);
  while (tab.step(eligible)) {
  }
  if (tab.obj_rhs < -kFeasibilityTol)
    fail(Errc::InfeasibleLP,
         "no feasible point (phase-1 residual " +
             std::to_string(-tab.obj_rhs) + ")");

  // Drive leftover artificials out of the basis; rows with no usable
  // original entry are redundant constraints and can be cleared.
  std::vector<int> keep;
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) {
      keep.push_back(i);
      continue;
    }
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(tab.t(i, j)) > kPivotTol) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      tab.pivot(i, col);
      keep.push_back(i);
    }
  }
  if (static_cast<int>(keep.size()) < m) {
    Eigen::MatrixXd reduced(keep.size(), tab.t.cols());
    std::vector<int> basis;
    for (size_t i = 0; i < keep.size(); ++i) {
      reduced.row(i) = tab.t.row(keep[i]);
      basis.push_back(tab.basis[keep[i]]);
    }
    tab.t = std::move(reduced);
    tab.basis = std::move(basis);
  }

  // Phase 2 objective from the current basis.
  tab.obj = Eigen::VectorXd::Zero(n + m);
  tab.obj_rhs = 0.0;
  for (int j = 0; j < n; ++j) tab.obj[j] = -lp.c[j];
  for (int i = 0; i < tab.rows(); ++i) {
    const double cb = tab.basis[i] < n ? lp.c[tab.basis[i]] : 0.0;
    if (cb == 0.0) continue;
    tab.obj += cb * tab.t.row(i).head(n + m).transpose();
    tab.obj_rhs += cb * tab.rhs(i);
  }
  for (int j = n; j < n + m; ++j) eligible[j] = 0;
  while (tab.step(eligible)) {
  }

  LpSolution sol;
  sol.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < tab.rows(); ++i) {
    if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.rhs(i);
  }
  sol.value = lp.c.dot(sol.x);
  sol.iterations = tab.iterations;
  return sol;
}

}  // namespace attn
