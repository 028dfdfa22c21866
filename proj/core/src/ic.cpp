#include "attn/ic.hpp"

#include <cmath>

namespace attn {

namespace {

constexpr double kIcSlack = 1e-12;     // weak inequality slack
constexpr double kActionTie = 1e-12;

void require_nonredundant(const InformationPolicy& p) {
  if (!affinely_independent(p.support()))
    fail(Errc::RedundantPolicy, "policy support is affinely dependent");
}

PairMargin make_margin(int i, int j, const Belief& a, const Belief& b,
                       const QuadraticModel& m) {
  PairMargin pm;
  pm.first = i;
  pm.second = j;
  pm.choice = choice_distance(a, b, m);
  pm.psychological = psychological_distance(a, b, m);
  pm.margin = pm.choice - pm.psychological;
  if (m.state_space().is_canonical_three()) {
    const AZPoint pa = az_from_belief(a, m.state_space());
    const AZPoint pb = az_from_belief(b, m.state_space());
    if (std::abs(pb.a - pa.a) > kActionTie)
      pm.abs_slope = std::abs((pb.z - pa.z) / (pb.a - pa.a));
  }
  return pm;
}

}  // namespace

std::optional<double> slope_cutoff(double kappa) {
  if (!(kappa > 0.0)) fail(Errc::NonPositiveKappa, "kappa must be positive");
  if (kappa > 2.0) return std::nullopt;
  return std::sqrt((2.0 - kappa) / (3.0 * kappa));
}

ICReport order_ic(const InformationPolicy& p, const QuadraticModel& m) {
  require_nonredundant(p);
  if (m.state_space().dim() != 1)
    fail(Errc::WrongStateSpace, "order-IC needs scalar actions");

  ICReport report;
  if (!m.is_general() && m.state_space().is_canonical_three())
    report.slope_cutoff = slope_cutoff(m.kappa());

  const InformationPolicy sorted = sort_by_action(p, m);
  for (int i = 0; i + 1 < sorted.size(); ++i) {
    PairMargin pm = make_margin(i, i + 1, sorted.belief(i),
                                sorted.belief(i + 1), m);
    report.margins.push_back(pm);
    if (pm.choice < kActionTie) {
      // Distinct beliefs with the same action: pooling them is strictly
      // profitable, so the policy can never be IC.
      report.violations.push_back(
          {i, i + 1, pm.choice, pm.psychological, "equal induced actions"});
    } else if (pm.choice < pm.psychological - kIcSlack) {
      report.violations.push_back({i, i + 1, pm.choice, pm.psychological,
                                   "choice distance below psychological"});
    }
  }
  report.ic = report.violations.empty();
  return report;
}

ICReport pairwise_ic_general(const InformationPolicy& p,
                             const QuadraticModel& m) {
  require_nonredundant(p);

  const bool scalar = m.state_space().dim() == 1;
  const InformationPolicy ordered = scalar ? sort_by_action(p, m) : p;

  ICReport report;
  bool consecutive_ok = true;
  for (int i = 0; i < ordered.size(); ++i) {
    for (int j = i + 1; j < ordered.size(); ++j) {
      PairMargin pm =
          make_margin(i, j, ordered.belief(i), ordered.belief(j), m);
      report.margins.push_back(pm);
      const bool violated = pm.choice < pm.psychological - kIcSlack;
      if (violated)
        report.violations.push_back({i, j, pm.choice, pm.psychological,
                                     "choice distance below psychological"});
      if (scalar && j == i + 1 && violated) consecutive_ok = false;
    }
  }
  report.ic = report.violations.empty();
  if (scalar) report.consecutive_agrees = (consecutive_ok == report.ic);
  return report;
}

}  // namespace attn
