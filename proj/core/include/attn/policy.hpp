#pragma once

#include <Eigen/Dense>
#include <vector>

#include "attn/quadratic.hpp"
#include "attn/simplex.hpp"

namespace attn {

// Finite-support distribution over beliefs whose mean equals the model prior
// (Bayes plausibility). Weights are strictly positive and sum to one; support
// beliefs are pairwise distinct. Construct through validate_policy.
class InformationPolicy {
 public:
  // Empty placeholder; validate_policy and the factories below produce the
  // only populated instances.
  InformationPolicy() = default;

  const std::vector<Belief>& support() const { return support_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  int size() const { return static_cast<int>(support_.size()); }
  const Belief& belief(int i) const { return support_[i]; }
  double weight(int i) const { return weights_[i]; }

  Belief mean() const;

  static InformationPolicy no_information(const Belief& prior);
  static InformationPolicy full_disclosure(const QuadraticModel& m);

 private:
  InformationPolicy(std::vector<Belief> support, Eigen::VectorXd weights)
      : support_(std::move(support)), weights_(std::move(weights)) {}

  friend InformationPolicy validate_policy(std::vector<Belief> support,
                                           Eigen::VectorXd weights,
                                           const QuadraticModel& m);

  std::vector<Belief> support_;
  Eigen::VectorXd weights_;
};

// Checks weights (> 0, summing to 1 within 1e-12), support distinctness
// (inf-norm gap > 1e-10) and Bayes plausibility against the model prior
// (residual within 1e-9). Throws NotBayesPlausible / NonPositiveWeight /
// DuplicateBelief with the offending quantity in the message.
InformationPolicy validate_policy(std::vector<Belief> support,
                                  Eigen::VectorXd weights,
                                  const QuadraticModel& m);

// Support reordered by induced action E_nu theta; stable for ties. If
// `action_tie` is non-null it is set when two consecutive actions coincide.
InformationPolicy sort_by_action(const InformationPolicy& p,
                                 const QuadraticModel& m,
                                 bool* action_tie = nullptr);

// Normalized consecutive belief differences, support sorted by action.
struct Direction {
  std::vector<Eigen::VectorXd> steps;
};

// Defined only for nonredundant policies with at least two support points and
// strictly increasing induced actions; ties raise AmbiguousDirection (such a
// policy is never IC anyway).
Direction direction(const InformationPolicy& p, const QuadraticModel& m);

// Whether q can be obtained from p by paying partial attention: for
// nonredundant p this is exactly supp(q) subseteq co[supp(p)] together with
// Bayes plausibility for the shared prior.
bool is_garbling_feasible(const InformationPolicy& q,
                          const InformationPolicy& p);

// Mean-preserving spread with the same direction: pushes the indexed extreme
// support point (first or last in action order; it must be interior to the
// simplex) outward along its incident step,
//   nu~ = neighbor + (1 + eps) * (nu - neighbor),
// and rebalances weights by the barycentric solve for the prior. eps must be
// small enough that the stretched belief stays in the simplex.
InformationPolicy spread_along_direction(const InformationPolicy& p, int index,
                                         double eps, const QuadraticModel& m);

}  // namespace attn
