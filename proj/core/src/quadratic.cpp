#include "attn/quadratic.hpp"

#include <cmath>
#include <iostream>

#include "attn/policy.hpp"

namespace attn {

namespace {

constexpr double kPsdFloor = -1e-10;
constexpr double kDecompositionTol = 1e-9;

// Validates symmetry and positive semidefiniteness; eigenvalues in
// [kPsdFloor, 0) are treated as rounding noise and clamped to zero.
Eigen::MatrixXd validate_psd(Eigen::MatrixXd m, const char* name,
                             bool* clamped) {
  if (m.rows() != m.cols()) fail(Errc::BadInput, std::string(name) + " is not square");
  if ((m - m.transpose()).lpNorm<Eigen::Infinity>() > 1e-12)
    fail(Errc::BadInput, std::string(name) + " is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd& ev = es.eigenvalues();
  if (ev.minCoeff() < kPsdFloor)
    fail(Errc::BadInput, std::string(name) + " is not positive semidefinite");
  if (ev.minCoeff() < 0.0) {
    *clamped = true;
    std::cerr << "warning: clamping slightly indefinite " << name
              << " (min eigenvalue " << ev.minCoeff() << ")\n";
    Eigen::VectorXd fixed = ev.cwiseMax(0.0);
    return es.eigenvectors() * fixed.asDiagonal() * es.eigenvectors().transpose();
  }
  return m;
}

void check_prior(const StateSpace& space, const Belief& prior) {
  if (prior.size() != space.num_states())
    fail(Errc::BadInput, "prior dimension does not match state space");
  if (prior.probs().minCoeff() <= 0.0)
    fail(Errc::BoundaryPrior, "prior must have full support");
}

double gamma_quad(const Eigen::MatrixXd& gamma_mat, const Eigen::VectorXd& y) {
  return y.dot(gamma_mat * y);
}

}  // namespace

QuadraticModel::QuadraticModel(StateSpace space, Belief prior, double kappa)
    : space_(std::move(space)), prior_(std::move(prior)), kappa_(kappa) {
  check_prior(space_, prior_);
  if (!space_.is_scalar())
    fail(Errc::BadInput, "main model requires scalar states");
  if (!(kappa > 0.0)) fail(Errc::NonPositiveKappa, "kappa must be positive");
}

QuadraticModel::QuadraticModel(StateSpace space, Belief prior,
                               GeneralQuadratic general)
    : space_(std::move(space)), prior_(std::move(prior)) {
  check_prior(space_, prior_);
  const int k = space_.num_states();
  const int j = space_.dim();
  GeneralQuadratic g = std::move(general);
  if (g.Gamma.rows() != j) fail(Errc::BadInput, "Gamma must be J x J");
  if (g.Pi.rows() != k) fail(Errc::BadInput, "Pi must be K x K");
  if (g.gamma.size() != k) fail(Errc::BadInput, "gamma must have K entries");
  if (g.pi_vec.size() != k) fail(Errc::BadInput, "pi must have K entries");
  g.Gamma = validate_psd(std::move(g.Gamma), "Gamma", &psd_clamped_);
  g.Pi = validate_psd(std::move(g.Pi), "Pi", &psd_clamped_);
  general_ = std::move(g);
}

double QuadraticModel::kappa() const {
  if (!kappa_) fail(Errc::BadInput, "general model has no scalar kappa");
  return *kappa_;
}

const GeneralQuadratic& QuadraticModel::general() const {
  if (!general_) fail(Errc::BadInput, "model has no general parameters");
  return *general_;
}

GeneralQuadratic QuadraticModel::as_general() const {
  if (general_) return *general_;
  const int k = space_.num_states();
  GeneralQuadratic g;
  g.Gamma = Eigen::MatrixXd::Identity(1, 1);
  g.Pi = kappa() * Eigen::MatrixXd::Identity(k, k);
  g.gamma = Eigen::VectorXd::Zero(k);
  g.pi_vec = Eigen::VectorXd::Zero(k);
  return g;
}

QuadraticModel QuadraticModel::to_general() const {
  return QuadraticModel(space_, prior_, as_general());
}

Eigen::VectorXd optimal_action(const Belief& nu, const QuadraticModel& m) {
  return m.state_space().states().transpose() * nu.probs();
}

double optimal_action_scalar(const Belief& nu, const QuadraticModel& m) {
  if (!m.state_space().is_scalar())
    fail(Errc::WrongStateSpace, "actions are not scalar");
  return m.state_space().states().col(0).dot(nu.probs());
}

double principal_value(const Belief& nu, const QuadraticModel& m) {
  const Eigen::MatrixXd& theta = m.state_space().states();
  const Eigen::VectorXd a = theta.transpose() * nu.probs();
  if (!m.is_general()) {
    // -Var_nu theta
    double e2 = 0.0;
    for (int i = 0; i < theta.rows(); ++i)
      e2 += nu[i] * theta(i, 0) * theta(i, 0);
    return -(e2 - a[0] * a[0]);
  }
  const GeneralQuadratic& g = m.general();
  double value = 0.0;
  for (int i = 0; i < theta.rows(); ++i) {
    const Eigen::VectorXd err = a - theta.row(i).transpose();
    value += nu[i] * (g.gamma[i] - gamma_quad(g.Gamma, err));
  }
  return value;
}

double attention_cost(const Belief& nu, const QuadraticModel& m) {
  const Eigen::VectorXd d = nu.probs() - m.prior().probs();
  if (!m.is_general()) return m.kappa() * d.squaredNorm();
  const GeneralQuadratic& g = m.general();
  return nu.probs().dot(g.pi_vec) + d.dot(g.Pi * d);
}

double agent_value(const Belief& nu, const QuadraticModel& m) {
  return principal_value(nu, m) - attention_cost(nu, m);
}

double choice_distance(const Belief& nu, const Belief& nup,
                       const QuadraticModel& m) {
  const Eigen::MatrixXd& theta = m.state_space().states();
  const Eigen::VectorXd da = theta.transpose() * (nup.probs() - nu.probs());
  if (!m.is_general()) return std::abs(da[0]);
  return std::sqrt(std::max(0.0, gamma_quad(m.general().Gamma, da)));
}

double psychological_distance(const Belief& nu, const Belief& nup,
                              const QuadraticModel& m) {
  const Eigen::VectorXd d = nup.probs() - nu.probs();
  if (!m.is_general()) return std::sqrt(m.kappa()) * d.norm();
  return std::sqrt(std::max(0.0, d.dot(m.general().Pi * d)));
}

Curvature segment_convexity(const Belief& nu, const Belief& nup,
                            const QuadraticModel& m) {
  if ((nu.probs() - nup.probs()).lpNorm<Eigen::Infinity>() == 0.0)
    fail(Errc::BadInput, "segment endpoints coincide");
  return choice_distance(nu, nup, m) >= psychological_distance(nu, nup, m)
             ? Curvature::Convex
             : Curvature::StrictlyConcave;
}

PayoffDecomposition principal_payoff_decomposition(const InformationPolicy& p,
                                                   const QuadraticModel& m) {
  const GeneralQuadratic g = m.as_general();
  const Eigen::MatrixXd& theta = m.state_space().states();

  PayoffDecomposition d{};
  double e_a_quad = 0.0;  // E_p[a*' Gamma a*]
  for (int i = 0; i < p.size(); ++i) {
    d.direct += p.weight(i) * principal_value(p.belief(i), m);
    const Eigen::VectorXd a = theta.transpose() * p.belief(i).probs();
    e_a_quad += p.weight(i) * gamma_quad(g.Gamma, a);
  }
  const Eigen::VectorXd a_mu = theta.transpose() * m.prior().probs();
  double e_theta_quad = 0.0;
  for (int i = 0; i < theta.rows(); ++i)
    e_theta_quad +=
        m.prior()[i] * gamma_quad(g.Gamma, theta.row(i).transpose());
  d.action_variance = e_a_quad - gamma_quad(g.Gamma, a_mu);
  d.prior_variance = e_theta_quad - gamma_quad(g.Gamma, a_mu);
  d.mean_material = m.prior().probs().dot(g.gamma);
  return d;
}

double expected_principal_payoff(const InformationPolicy& p,
                                 const QuadraticModel& m) {
  const PayoffDecomposition d = principal_payoff_decomposition(p, m);
  const double via_variance =
      d.mean_material + d.action_variance - d.prior_variance;
  if (std::abs(d.direct - via_variance) > kDecompositionTol)
    fail(Errc::BadInput,
         "law-of-total-variance decomposition mismatch: " +
             std::to_string(d.direct) + " vs " + std::to_string(via_variance));
  return d.direct;
}

}  // namespace attn
