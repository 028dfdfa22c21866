#pragma once

#include <Eigen/Dense>
#include <optional>

#include "attn/simplex.hpp"

namespace attn {

class InformationPolicy;

// Parameters of the generalized quadratic model: material payoff
// u(a, theta) = gamma_theta - (a - theta)' Gamma (a - theta) and attention
// cost c(nu) = nu' pi_vec + (nu - mu)' Pi (nu - mu). Gamma is J x J, Pi is
// K x K, both positive semidefinite.
struct GeneralQuadratic {
  Eigen::MatrixXd Gamma;
  Eigen::MatrixXd Pi;
  Eigen::VectorXd gamma;
  Eigen::VectorXd pi_vec;
};

enum class Curvature { Convex, StrictlyConcave };

// Main model: u(a, theta) = -(a - theta)^2, c(nu) = kappa * ||nu - mu||^2.
// The main model coincides with the general one at J = 1, gamma = pi = 0,
// Gamma = 1, Pi = kappa * I. The prior must have full support.
class QuadraticModel {
 public:
  QuadraticModel(StateSpace space, Belief prior, double kappa);
  QuadraticModel(StateSpace space, Belief prior, GeneralQuadratic general);

  const StateSpace& state_space() const { return space_; }
  const Belief& prior() const { return prior_; }

  bool is_general() const { return general_.has_value(); }
  double kappa() const;  // main model only
  const GeneralQuadratic& general() const;

  // Materializes the main-model parameters in general form.
  GeneralQuadratic as_general() const;
  QuadraticModel to_general() const;

  // True when PSD validation had to clamp slightly negative eigenvalues.
  bool psd_clamped() const { return psd_clamped_; }

 private:
  StateSpace space_;
  Belief prior_;
  std::optional<double> kappa_;
  std::optional<GeneralQuadratic> general_;
  bool psd_clamped_ = false;
};

// a*(nu) = E_nu theta, the agent's optimal action (componentwise for vector
// states).
Eigen::VectorXd optimal_action(const Belief& nu, const QuadraticModel& m);
double optimal_action_scalar(const Belief& nu, const QuadraticModel& m);

// U_P(nu) = -Var_nu theta in the main model; E_nu[gamma_theta] minus the
// Gamma-weighted expected squared action error in the general one.
double principal_value(const Belief& nu, const QuadraticModel& m);

double attention_cost(const Belief& nu, const QuadraticModel& m);

// U_A = U_P - c.
double agent_value(const Belief& nu, const QuadraticModel& m);

// |E_nu theta - E_nu' theta|, resp. the Gamma-seminorm of the action gap.
double choice_distance(const Belief& nu, const Belief& nup,
                       const QuadraticModel& m);

// sqrt(kappa) * ||nu - nu'||, resp. the Pi-seminorm of the belief gap.
double psychological_distance(const Belief& nu, const Belief& nup,
                              const QuadraticModel& m);

// U_A restricted to the segment [nu, nu'] is quadratic; it is convex exactly
// when the choice distance weakly exceeds the psychological distance.
// Equality is classified as Convex.
Curvature segment_convexity(const Belief& nu, const Belief& nup,
                            const QuadraticModel& m);

struct PayoffDecomposition {
  double direct;           // sum_i w_i U_P(nu_i)
  double action_variance;  // Var_p[a*(nu)] in the Gamma seminorm
  double prior_variance;   // Var_mu[theta] in the Gamma seminorm
  double mean_material;    // E_mu gamma_theta (zero in the main model)
};

// Law of total variance: direct = mean_material + action_variance -
// prior_variance. Exposed so callers can check the identity themselves.
PayoffDecomposition principal_payoff_decomposition(const InformationPolicy& p,
                                                   const QuadraticModel& m);

// sum_i w_i U_P(nu_i); verifies the decomposition identity to 1e-9.
double expected_principal_payoff(const InformationPolicy& p,
                                 const QuadraticModel& m);

}  // namespace attn
