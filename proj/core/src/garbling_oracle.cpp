#include "attn/garbling_oracle.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "attn/lp.hpp"

namespace attn {

namespace {

constexpr double kMergeGap = 1e-10;
constexpr double kDropWeight = 1e-12;

double default_tol(double full_value) {
  return 1e-6 * (1.0 + std::abs(full_value));
}

// All compositions of `grid` into n nonnegative parts, as weights /grid.
void enumerate_lattice(int grid, int n,
                       const std::function<void(const Eigen::VectorXd&)>& emit) {
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(n);
  Eigen::VectorXd lambda(n);
  // Iterative odometer over compositions.
  std::vector<int> stack(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n - 1) {
      counts[pos] = remaining;
      for (int i = 0; i < n; ++i)
        lambda[i] = static_cast<double>(counts[i]) / grid;
      emit(lambda);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      counts[pos] = k;
      rec(pos + 1, remaining - k);
    }
  };
  rec(0, grid);
}

InformationPolicy extract_policy(const std::vector<Belief>& columns,
                                 const Eigen::VectorXd& x,
                                 const QuadraticModel& m) {
  std::vector<Belief> support;
  std::vector<double> weights;
  for (int g = 0; g < x.size(); ++g) {
    if (x[g] <= kDropWeight) continue;
    bool merged = false;
    for (size_t i = 0; i < support.size(); ++i) {
      if ((support[i].probs() - columns[g].probs())
              .lpNorm<Eigen::Infinity>() <= kMergeGap) {
        weights[i] += x[g];
        merged = true;
        break;
      }
    }
    if (!merged) {
      support.push_back(columns[g]);
      weights.push_back(x[g]);
    }
  }
  Eigen::VectorXd w =
      Eigen::Map<Eigen::VectorXd>(weights.data(), weights.size());
  w /= w.sum();
  return validate_policy(std::move(support), std::move(w), m);
}

}  // namespace

const char* verdict_name(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::IC:
      return "IC";
    case OracleVerdict::NotIC:
      return "NotIC";
    case OracleVerdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

OracleReport best_garbling_lp(const InformationPolicy& p,
                              const QuadraticModel& m, int grid, double tol) {
  if (grid < 1) fail(Errc::BadInput, "grid resolution must be >= 1");
  if (!affinely_independent(p.support()))
    fail(Errc::RedundantPolicy, "oracle requires a nonredundant policy");

  const int n = p.size();
  const int k = m.state_space().num_states();

  // Candidate garbling posteriors: barycentric lattice over the support plus
  // the conditional-mean pooling point of every support pair.
  std::vector<Belief> columns;
  auto add_lambda = [&](const Eigen::VectorXd& lambda) {
    Eigen::VectorXd probs = Eigen::VectorXd::Zero(k);
    for (int i = 0; i < n; ++i) probs += lambda[i] * p.belief(i).probs();
    columns.push_back(Belief(std::move(probs)));
  };
  enumerate_lattice(grid, n, add_lambda);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd lambda = Eigen::VectorXd::Zero(n);
      const double total = p.weight(i) + p.weight(j);
      lambda[i] = p.weight(i) / total;
      lambda[j] = p.weight(j) / total;
      add_lambda(lambda);
    }
  }

  LinearProgram lp;
  const int cols = static_cast<int>(columns.size());
  lp.A.resize(k, cols);
  lp.c.resize(cols);
  for (int g = 0; g < cols; ++g) {
    lp.A.col(g) = columns[g].probs();
    lp.c[g] = agent_value(columns[g], m);
  }
  lp.b = m.prior().probs();

  double full = 0.0;
  for (int i = 0; i < n; ++i)
    full += p.weight(i) * agent_value(p.belief(i), m);

  const LpSolution sol = solve_lp(lp);

  OracleReport report;
  report.best_value = sol.value;
  report.full_attention_value = full;
  report.gap = sol.value - full;
  report.grid_resolution = grid;
  report.tolerance = tol < 0.0 ? default_tol(full) : tol;
  report.lp_columns = cols;
  report.lp_iterations = sol.iterations;
  report.best_garbling = extract_policy(columns, sol.x, m);
  report.verdict = report.gap > report.tolerance ? OracleVerdict::NotIC
                                                 : OracleVerdict::IC;
  return report;
}

OracleReport ic_via_oracle(const InformationPolicy& p, const QuadraticModel& m,
                           int grid, double tol) {
  const OracleReport coarse = best_garbling_lp(p, m, grid, tol);
  OracleReport fine = best_garbling_lp(p, m, 2 * grid, tol);
  if (std::abs(fine.gap - coarse.gap) > fine.tolerance) {
    fine.verdict = OracleVerdict::Inconclusive;
  }
  return fine;
}

}  // namespace attn
