#pragma once

#include <optional>
#include <vector>

#include "attn/optimal3.hpp"

namespace attn {

// Independent verification of the three-state closed form by exhaustive
// search over the reduced candidate family: ternary policies with critical
// slopes +-s*(kappa),
//   t(a1, a2) = ( a1, 1 + a1,
//                 a2, 1 + (1-s) a1 + s a2,
//                 -a1 - 2s/(1-s) a2, 1 + a1 + 2s/(1-s) a2 ),
// plus binary policies on L and R through the prior.

struct CandidateGrid {
  std::vector<double> a1;     // includes the closed-form optimizer exactly
  std::vector<double> a2;
  std::vector<double> slope;  // binary slopes, both signs
};

CandidateGrid make_candidate_grid(const Belief& prior, double kappa,
                                  int density);

// The t(a1, a2) policy when it is Bayes-plausible with nonnegative weights
// and all three points inside the triangle; nullopt otherwise. Collapsed
// cases (t1 = t2 or t2 = t3) reduce to the binary policy on the surviving
// pair. kappa must lie in (1/2, 2) so that s*(kappa) is in (0, 1); the prior
// must be interior with a_mu >= 0.
std::optional<InformationPolicy> candidate_policy(double a1, double a2,
                                                  double kappa,
                                                  const Belief& prior);

// Binary policy on L and R along the line of slope s_tilde through the
// prior; nullopt when an endpoint leaves its segment.
std::optional<InformationPolicy> binary_slope_policy(const Belief& prior,
                                                     double s_tilde);

struct Prop2Report {
  double closed_payoff = 0.0;
  double grid_max = 0.0;
  double gap = 0.0;  // closed_payoff - grid_max
  bool winner_is_binary = false;
  std::optional<double> argmax_a1, argmax_a2;  // ternary winner
  std::optional<double> argmax_slope;          // binary winner
  bool matches_closed_form = false;  // argmax within one cell of closed form
  bool all_candidates_ic = false;
  int non_ic_candidates = 0;
  double affine_max_residual = 0.0;  // per-a1-row affine fit in a2
  bool negative_branch_wins = false;
  int ternary_feasible = 0;
  int binary_feasible = 0;
  double tol = 0.0;
  bool ok = false;
  std::vector<std::string> failures;
};

// Grid search over candidate_policy and the binary slopes; every scored
// candidate is checked with order_ic first. Asserts that the closed form
// weakly dominates the grid (within tol), that the argmax sits within one
// grid cell of the closed-form parameters, that payoffs are affine in a2 for
// each fixed a1, and that the negative-slope binary branch wins for
// a_mu >= 0. Outside kappa in (1/2, 2) only full/no disclosure and the
// orthogonal policy are compared.
Prop2Report verify_prop2(const Belief& prior, double kappa, int grid_density,
                         double tol);

}  // namespace attn
