#include "attn/policy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace attn {

namespace {

constexpr double kWeightSumTol = 1e-12;
constexpr double kBayesTol = 1e-9;
constexpr double kDistinctGap = 1e-10;
constexpr double kActionTieTol = 1e-12;

std::vector<int> action_order(const std::vector<Belief>& support,
                              const QuadraticModel& m) {
  std::vector<double> actions(support.size());
  for (size_t i = 0; i < support.size(); ++i)
    actions[i] = optimal_action_scalar(support[i], m);
  std::vector<int> order(support.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return actions[a] < actions[b]; });
  return order;
}

}  // namespace

Belief InformationPolicy::mean() const {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(support_[0].size());
  for (int i = 0; i < size(); ++i) acc += weights_[i] * support_[i].probs();
  return Belief(std::move(acc));
}

InformationPolicy InformationPolicy::no_information(const Belief& prior) {
  Eigen::VectorXd w(1);
  w << 1.0;
  return InformationPolicy({prior}, std::move(w));
}

InformationPolicy InformationPolicy::full_disclosure(const QuadraticModel& m) {
  const int k = m.state_space().num_states();
  std::vector<Belief> support;
  support.reserve(k);
  for (int i = 0; i < k; ++i) support.push_back(Belief::dirac(i, k));
  return InformationPolicy(std::move(support), m.prior().probs());
}

InformationPolicy validate_policy(std::vector<Belief> support,
                                  Eigen::VectorXd weights,
                                  const QuadraticModel& m) {
  if (support.empty()) fail(Errc::BadInput, "empty support");
  if (static_cast<int>(support.size()) != weights.size())
    fail(Errc::BadInput, "support and weight lengths differ");
  const int k = m.state_space().num_states();
  for (const Belief& b : support) {
    if (b.size() != k) fail(Errc::BadInput, "belief dimension mismatch");
  }

  for (int i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0))
      fail(Errc::NonPositiveWeight,
           "weight " + std::to_string(i) + " = " + std::to_string(weights[i]));
  }
  const double sum = weights.sum();
  if (std::abs(sum - 1.0) > kWeightSumTol)
    fail(Errc::BadInput, "weights sum to " + std::to_string(sum));

  for (size_t i = 0; i < support.size(); ++i) {
    for (size_t j = i + 1; j < support.size(); ++j) {
      const double gap = (support[i].probs() - support[j].probs())
                             .lpNorm<Eigen::Infinity>();
      if (gap <= kDistinctGap)
        fail(Errc::DuplicateBelief, "support beliefs " + std::to_string(i) +
                                        " and " + std::to_string(j) +
                                        " coincide (gap " +
                                        std::to_string(gap) + ")");
    }
  }

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(k);
  for (size_t i = 0; i < support.size(); ++i)
    mean += weights[i] * support[i].probs();
  const double residual =
      (mean - m.prior().probs()).lpNorm<Eigen::Infinity>();
  if (residual > kBayesTol)
    fail(Errc::NotBayesPlausible,
         "mean of support differs from prior, residual " +
             std::to_string(residual));

  return InformationPolicy(std::move(support), std::move(weights));
}

InformationPolicy sort_by_action(const InformationPolicy& p,
                                 const QuadraticModel& m, bool* action_tie) {
  const std::vector<int> order = action_order(p.support(), m);
  std::vector<Belief> support;
  support.reserve(p.size());
  Eigen::VectorXd weights(p.size());
  for (int i = 0; i < p.size(); ++i) {
    support.push_back(p.belief(order[i]));
    weights[i] = p.weight(order[i]);
  }
  if (action_tie) {
    *action_tie = false;
    for (int i = 0; i + 1 < p.size(); ++i) {
      const double da = optimal_action_scalar(support[i + 1], m) -
                        optimal_action_scalar(support[i], m);
      if (std::abs(da) < kActionTieTol) *action_tie = true;
    }
  }
  return validate_policy(std::move(support), std::move(weights), m);
}

Direction direction(const InformationPolicy& p, const QuadraticModel& m) {
  if (p.size() < 2)
    fail(Errc::BadInput, "direction needs at least two support points");
  if (!affinely_independent(p.support()))
    fail(Errc::RedundantPolicy, "support is affinely dependent");
  bool tie = false;
  const InformationPolicy sorted = sort_by_action(p, m, &tie);
  if (tie)
    fail(Errc::AmbiguousDirection,
         "two support beliefs induce the same action");
  Direction d;
  d.steps.reserve(sorted.size() - 1);
  for (int i = 0; i + 1 < sorted.size(); ++i) {
    Eigen::VectorXd step =
        sorted.belief(i + 1).probs() - sorted.belief(i).probs();
    d.steps.push_back(step / step.norm());
  }
  return d;
}

bool is_garbling_feasible(const InformationPolicy& q,
                          const InformationPolicy& p) {
  if (!affinely_independent(p.support()))
    fail(Errc::RedundantPolicy, "source policy has affinely dependent support");
  const double mean_gap =
      (q.mean().probs() - p.mean().probs()).lpNorm<Eigen::Infinity>();
  if (mean_gap > kBayesTol) return false;
  for (const Belief& b : q.support()) {
    if (!barycentric(b, p.support())) return false;
  }
  return true;
}

InformationPolicy spread_along_direction(const InformationPolicy& p, int index,
                                         double eps, const QuadraticModel& m) {
  if (!(eps > 0.0)) fail(Errc::BadInput, "eps must be positive");
  if (p.size() < 2)
    fail(Errc::BadInput, "cannot spread a singleton policy");
  if (!affinely_independent(p.support()))
    fail(Errc::RedundantPolicy, "support is affinely dependent");
  bool tie = false;
  const InformationPolicy sorted = sort_by_action(p, m, &tie);
  if (tie)
    fail(Errc::AmbiguousDirection,
         "two support beliefs induce the same action");

  const int n = sorted.size();
  if (index != 0 && index != n - 1)
    fail(Errc::InvalidIndex,
         "only the first or last point in action order can be stretched");
  if (sorted.belief(index).probs().minCoeff() <= 0.0)
    fail(Errc::NotInterior, "stretched belief must be interior to the simplex");

  const int neighbor = index == 0 ? 1 : n - 2;
  const Eigen::VectorXd stretched =
      sorted.belief(neighbor).probs() +
      (1.0 + eps) *
          (sorted.belief(index).probs() - sorted.belief(neighbor).probs());
  if (stretched.minCoeff() < -1e-12)
    fail(Errc::EpsilonTooLarge, "stretched belief leaves the simplex");

  std::vector<Belief> support = sorted.support();
  support[index] = Belief(stretched);
  const auto lambda = barycentric(m.prior(), support);
  if (!lambda)
    fail(Errc::EpsilonTooLarge, "prior left the hull of the spread support");
  return validate_policy(std::move(support), *lambda, m);
}

}  // namespace attn
