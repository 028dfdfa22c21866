#include "attn/optimal3.hpp"

#include <algorithm>
#include <cmath>

namespace attn {

namespace {

constexpr double kThresholdSnap = 1e-12;
constexpr double kBoundSlack = 1e-12;

void require_interior3(const Belief& prior) {
  if (prior.size() != 3)
    fail(Errc::WrongStateSpace, "three-state prior required");
  if (prior.probs().minCoeff() <= 0.0)
    fail(Errc::BoundaryPrior, "prior must be interior");
}

double require_s_star(double kappa) {
  const auto s = slope_cutoff(kappa);
  if (!s) fail(Errc::OutOfRegime, "kappa > 2 admits no informative IC policy");
  return *s;
}

OptimalOutcome mirror_outcome(OptimalOutcome out, const Belief& prior,
                              double kappa) {
  const QuadraticModel model = canonical3_model(prior, kappa);
  std::vector<Belief> support;
  Eigen::VectorXd weights(out.policy.size());
  // Mirroring reverses the action order; reversing the list keeps the
  // support ascending.
  for (int i = out.policy.size() - 1; i >= 0; --i) {
    support.push_back(mirror(out.policy.belief(i)));
    weights[out.policy.size() - 1 - i] = out.policy.weight(i);
  }
  out.policy = validate_policy(std::move(support), std::move(weights), model);
  if (out.downplay)
    std::swap(out.downplay->pi_minus1, out.downplay->pi_plus1);
  if (out.exaggerate) out.exaggerate->pi = 1.0 - out.exaggerate->pi;
  out.reflected = true;
  return out;
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::FullRevelation:
      return "full_revelation";
    case Regime::Downplaying:
      return "downplaying";
    case Regime::SeparatingExaggeration:
      return "separating_exaggeration";
    case Regime::Exaggeration:
      return "exaggeration";
    case Regime::NoDisclosure:
      return "no_disclosure";
  }
  return "?";
}

double prior_action(const Belief& prior) {
  require_interior3(prior);
  return prior[2] - prior[0];
}

double prior_variance_theta(const Belief& prior) {
  const double a = prior[2] - prior[0];
  return (prior[0] + prior[2]) - a * a;
}

QuadraticModel canonical3_model(const Belief& prior, double kappa) {
  return QuadraticModel(StateSpace::canonical3(), prior, kappa);
}

Thresholds thresholds(const Belief& prior) {
  require_interior3(prior);
  const double a = std::abs(prior_action(prior));
  const double mu0 = prior[1];
  Thresholds th;
  th.k1 = 0.5;
  const double r2 = (1.0 - a + mu0) / (1.0 - a);
  th.k2 = 2.0 / (0.75 * r2 * r2 + 1.0);
  const double r3 = mu0 / (1.0 - a);
  th.k3 = 2.0 / (3.0 * r3 * r3 + 1.0);
  th.k4 = 2.0;
  return th;
}

OptimalOutcome downplaying_policy(const Belief& prior, double kappa) {
  require_interior3(prior);
  if (prior_action(prior) < 0.0)
    return mirror_outcome(downplaying_policy(mirror(prior), kappa), prior,
                          kappa);

  const Thresholds th = thresholds(prior);
  if (!(kappa > th.k1) || kappa > th.k2 + kThresholdSnap)
    fail(Errc::OutOfRegime, "downplaying is optimal only on (k1, k2]");

  const double s = require_s_star(kappa);
  const double a_mu = prior_action(prior);
  const double mu0 = prior[1];
  const double w0 = mu0 / s;
  const double w_plus = (1.0 - w0 + a_mu) / 2.0;
  const double w_minus = (1.0 - w0 - a_mu) / 2.0;
  if (!(w0 > 0.0 && w0 < 1.0) || w_plus <= 0.0 || w_minus <= 0.0)
    fail(Errc::WeightOutOfRange,
         "downplaying weights left (0,1); regime dispatch is inconsistent");

  const StateSpace space = StateSpace::canonical3();
  const QuadraticModel model = canonical3_model(prior, kappa);
  std::vector<Belief> support{Belief::dirac(0, 3),
                              belief_from_az({0.0, s}, space),
                              Belief::dirac(2, 3)};
  Eigen::VectorXd weights(3);
  weights << w_minus, w0, w_plus;

  OptimalOutcome out;
  out.regime = Regime::Downplaying;
  out.policy = validate_policy(std::move(support), std::move(weights), model);
  out.downplay = DownplaySignal{clamp01((w0 - mu0) / (2.0 * prior[0])),
                                clamp01((w0 - mu0) / (2.0 * prior[2]))};
  out.payoff = expected_principal_payoff(out.policy, model);
  out.degenerate = std::abs(kappa - th.k2) <= kThresholdSnap;
  return out;
}

OptimalOutcome exaggeration_policy(const Belief& prior, double kappa) {
  require_interior3(prior);
  if (prior_action(prior) < 0.0)
    return mirror_outcome(exaggeration_policy(mirror(prior), kappa), prior,
                          kappa);

  const Thresholds th = thresholds(prior);
  if (kappa < th.k2 - kThresholdSnap || kappa > th.k4)
    fail(Errc::OutOfRegime, "exaggeration is optimal only on [k2, k4]");

  const double s = require_s_star(kappa);
  const double a_mu = prior_action(prior);
  const double mu0 = prior[1];
  const double bound = mu0 / (1.0 - a_mu);
  const bool separating = kappa <= th.k3 + kThresholdSnap;
  const double st = -std::min(s, bound);  // s~, negative branch for a_mu >= 0

  const double a_l = -(1.0 - mu0 + st * a_mu) / (1.0 - st);
  const double z_l = (mu0 - st * (1.0 + a_mu)) / (1.0 - st);
  const double a_r = (1.0 - mu0 + st * a_mu) / (1.0 + st);
  const double z_r = (mu0 + st * (1.0 - a_mu)) / (1.0 + st);
  const double w_l = (1.0 - st) / 2.0 * (1.0 - mu0 - a_mu) /
                     (1.0 - mu0 + st * a_mu);
  const double w_r = (1.0 + st) / 2.0 * (1.0 - mu0 + a_mu) /
                     (1.0 - mu0 + st * a_mu);
  if (w_l <= 0.0 || w_r <= 0.0)
    fail(Errc::WeightOutOfRange,
         "binary weights left (0,1); regime dispatch is inconsistent");

  const StateSpace space = StateSpace::canonical3();
  const QuadraticModel model = canonical3_model(prior, kappa);
  std::vector<Belief> support{
      belief_from_az({a_l, std::max(0.0, z_l)}, space),
      belief_from_az({a_r, std::max(0.0, z_r)}, space)};
  Eigen::VectorXd weights(2);
  weights << w_l, w_r;

  OptimalOutcome out;
  out.regime = separating ? Regime::SeparatingExaggeration
                          : Regime::Exaggeration;
  out.policy = validate_policy(std::move(support), std::move(weights), model);
  // pi = P(message -1 | theta = 0) = w_l z_l / mu0; exactly 1 on the
  // separating branch, where the R belief is delta_1.
  out.exaggerate =
      ExaggerateSignal{separating ? 1.0 : clamp01(w_l * z_l / mu0)};
  out.payoff = expected_principal_payoff(out.policy, model);
  out.degenerate = std::abs(kappa - th.k2) <= kThresholdSnap;
  return out;
}

OptimalOutcome solve(const Belief& prior, double kappa) {
  require_interior3(prior);
  if (!(kappa > 0.0)) fail(Errc::NonPositiveKappa, "kappa must be positive");
  if (prior_action(prior) < 0.0)
    return mirror_outcome(solve(mirror(prior), kappa), prior, kappa);

  const Thresholds th = thresholds(prior);
  const QuadraticModel model = canonical3_model(prior, kappa);

  if (kappa <= th.k1) {
    OptimalOutcome out;
    out.regime = Regime::FullRevelation;
    out.policy = InformationPolicy::full_disclosure(model);
    out.payoff = expected_principal_payoff(out.policy, model);
    return out;
  }
  if (kappa <= th.k2 + kThresholdSnap) return downplaying_policy(prior, kappa);
  if (kappa <= th.k4) return exaggeration_policy(prior, kappa);

  OptimalOutcome out;
  out.regime = Regime::NoDisclosure;
  out.policy = InformationPolicy::no_information(prior);
  out.payoff = expected_principal_payoff(out.policy, model);
  return out;
}

double binary_payoff(const Belief& prior, double s_tilde) {
  require_interior3(prior);
  if (!(s_tilde * s_tilde < 1.0))
    fail(Errc::InfeasibleSlope, "slope magnitude must be below 1");
  const double a_mu = prior_action(prior);
  const double mu0 = prior[1];
  const double z_l = (mu0 - s_tilde * (1.0 + a_mu)) / (1.0 - s_tilde);
  const double z_r = (mu0 + s_tilde * (1.0 - a_mu)) / (1.0 + s_tilde);
  if (z_l < -kBoundSlack || z_r < -kBoundSlack)
    fail(Errc::InfeasibleSlope,
         "slope " + std::to_string(s_tilde) + " leaves the L/R segments");
  const double b = 1.0 - mu0;
  return (b * b - a_mu * a_mu) / (1.0 - s_tilde * s_tilde) -
         prior_variance_theta(prior);
}

double ternary_a1_max(const Belief& prior) {
  const double a_mu = prior_action(prior);
  const double mu0 = prior[1];
  // L endpoint at which the middle weight hits zero: the intersection of L
  // with the line of slope -mu0/(1 - a_mu) through the prior.
  return -(1.0 - a_mu - mu0) / (1.0 - a_mu + mu0);
}

double ternary_payoff(const Belief& prior, double kappa, double a1) {
  require_interior3(prior);
  const double a_mu = prior_action(prior);
  if (a_mu < 0.0)
    fail(Errc::OutOfRange, "ternary_payoff requires the a_mu >= 0 orientation");
  if (!(kappa > 0.5) || !(kappa < 2.0))
    fail(Errc::KappaOutOfRange, "ternary family needs kappa in (1/2, 2)");
  const double hi = ternary_a1_max(prior);
  if (a1 < -1.0 - kBoundSlack || a1 > hi + kBoundSlack)
    fail(Errc::OutOfRange, "a1 = " + std::to_string(a1) +
                               " outside [-1, " + std::to_string(hi) + "]");
  const double s = require_s_star(kappa);
  const double mu0 = prior[1];
  const double value =
      -a_mu * a_mu +
      (a1 * (1.0 - a_mu + mu0 - 2.0 * s * (1.0 - a_mu)) + 1.0 - mu0 - a_mu +
       2.0 * s * a_mu) /
          (2.0 * s);
  return value - prior_variance_theta(prior);
}

InformationPolicy orthogonal_policy(const Belief& prior) {
  require_interior3(prior);
  const double a_mu = prior_action(prior);
  const double mu0 = prior[1];
  const StateSpace space = StateSpace::canonical3();
  std::vector<Belief> support{belief_from_az({mu0 - 1.0, mu0}, space),
                              belief_from_az({1.0 - mu0, mu0}, space)};
  const double w_r = (1.0 + a_mu / (1.0 - mu0)) / 2.0;
  Eigen::VectorXd weights(2);
  weights << 1.0 - w_r, w_r;
  // Any kappa works for validation; the policy itself is model-free.
  return validate_policy(std::move(support), std::move(weights),
                         canonical3_model(prior, 1.0));
}

}  // namespace attn
