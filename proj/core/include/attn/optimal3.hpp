#pragma once

#include <optional>
#include <string>

#include "attn/ic.hpp"
#include "attn/policy.hpp"

namespace attn {

// Closed-form optimal attention outcomes for the three-state model
// Theta = {-1, 0, 1}.

// Cost thresholds separating the five regimes. With a_mu = mu_1 - mu_{-1}:
//   k1 = 1/2
//   k2 = 2 / ( (3/4) ((1 - |a_mu| + mu_0) / (1 - |a_mu|))^2 + 1 )
//   k3 = 2 / (  3    (mu_0 / (1 - |a_mu|))^2 + 1 )
//   k4 = 2
// and k1 < k2 < k3 < k4 for every interior prior.
struct Thresholds {
  double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0;
};

enum class Regime {
  FullRevelation,
  Downplaying,
  SeparatingExaggeration,
  Exaggeration,
  NoDisclosure,
};

const char* regime_name(Regime r);

// Downplaying signal: report 0 truthfully, report an extreme state as 0 with
// probability pi_theta. Exaggeration signal: report extremes truthfully,
// route state 0 to message -1 with probability pi (to +1 with 1 - pi).
struct DownplaySignal {
  double pi_minus1 = 0.0;
  double pi_plus1 = 0.0;
};
struct ExaggerateSignal {
  double pi = 0.0;
};

struct OptimalOutcome {
  Regime regime = Regime::NoDisclosure;
  InformationPolicy policy;
  std::optional<DownplaySignal> downplay;
  std::optional<ExaggerateSignal> exaggerate;
  double payoff = 0.0;      // E_p[U_P], same scale as expected_principal_payoff
  bool degenerate = false;  // kappa at a threshold with multiple optima
  bool reflected = false;   // input had a_mu < 0 and was solved by reflection
};

Thresholds thresholds(const Belief& prior);

// Optimal policy on (k1, k2]: support {delta_{-1}, nu_(0, s*(kappa)),
// delta_1}, both slope constraints exactly binding. Weights
//   w_0 = mu_0 / s*,  w_{+-1} = (1 - mu_0/s* +- a_mu) / 2,
// signal pi_theta = (mu_0/s* - mu_0) / (2 mu_theta).
OptimalOutcome downplaying_policy(const Belief& prior, double kappa);

// Optimal policy on [k2, k4]: binary support on L and R along the line of
// slope s~ = -min{s*(kappa), mu_0 / (1 - a_mu)} through (a_mu, mu_0). On
// [k2, k3] the R belief is delta_1 and pi = 1 (separating exaggeration).
OptimalOutcome exaggeration_policy(const Belief& prior, double kappa);

// Dispatches on the thresholds; kappa within rounding of k2 resolves to
// downplaying with the degenerate flag set. Priors with a_mu < 0 are solved
// by reflection and mirrored back.
OptimalOutcome solve(const Belief& prior, double kappa);

// E_p[U_P] of the binary policy on L and R with slope s~ through the prior:
//   ((1 - mu_0)^2 - a_mu^2) / (1 - s~^2) - Var_mu theta.
// Strictly increasing in |s~|. Throws InfeasibleSlope when either endpoint
// leaves its segment or s~^2 >= 1.
double binary_payoff(const Belief& prior, double s_tilde);

// E_p[U_P] of the ternary policy with critical slopes, delta_1 in the
// support, and L endpoint at a1. Affine in a1:
//   -a_mu^2 + (1/2s)[a1 (1 - a_mu + mu_0 - 2s(1 - a_mu))
//                    + 1 - mu_0 - a_mu + 2 s a_mu] - Var_mu theta.
// Requires a_mu >= 0 and a1 in [-1, -(1 - a_mu - mu_0)/(1 - a_mu + mu_0)];
// at the right endpoint the middle weight vanishes and the value coincides
// with binary_payoff at s~ = -mu_0/(1 - a_mu).
double ternary_payoff(const Belief& prior, double kappa, double a1);

// Feasible a1 range of ternary_payoff (see above).
double ternary_a1_max(const Belief& prior);

// Convenience values used across the solver and the search module.
double prior_action(const Belief& prior);           // a_mu
double prior_variance_theta(const Belief& prior);   // Var_mu theta
InformationPolicy orthogonal_policy(const Belief& prior);  // slope-0 binary
QuadraticModel canonical3_model(const Belief& prior, double kappa);

}  // namespace attn
