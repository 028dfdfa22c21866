#pragma once

#include <optional>
#include <string>
#include <vector>

#include "attn/policy.hpp"

namespace attn {

struct PairMargin {
  int first = 0;   // indices into the action-sorted support
  int second = 0;
  double choice = 0.0;
  double psychological = 0.0;
  double margin = 0.0;  // choice - psychological
  std::optional<double> abs_slope;  // |dz/da| for the three-state chart
};

struct ICViolation {
  int first = 0;
  int second = 0;
  double choice = 0.0;
  double psychological = 0.0;
  std::string note;
};

struct ICReport {
  bool ic = false;
  std::vector<ICViolation> violations;
  // Raw per-pair margins so callers can pick their own notion of "binding".
  std::vector<PairMargin> margins;
  std::optional<double> slope_cutoff;  // s*(kappa) when three-state
  // Set by pairwise_ic_general when actions are scalar: whether checking only
  // consecutive pairs reaches the same verdict as checking all pairs.
  std::optional<bool> consecutive_agrees;
};

// s*(kappa) = sqrt((2 - kappa) / (3 kappa)); empty for kappa > 2, where no
// multi-message policy is IC.
std::optional<double> slope_cutoff(double kappa);

// Order-IC: after sorting the support by induced action, every consecutive
// pair must have choice distance >= psychological distance (weak inequality,
// absolute slack 1e-12). Equal-action pairs short-circuit to a violation.
// The policy must be nonredundant.
ICReport order_ic(const InformationPolicy& p, const QuadraticModel& m);

// Generalized pairwise condition over all unordered support pairs,
// ||E_nu' theta - E_nu theta||_Gamma >= ||nu' - nu||_Pi. For scalar actions
// also cross-checks the consecutive-pair reduction.
ICReport pairwise_ic_general(const InformationPolicy& p,
                             const QuadraticModel& m);

}  // namespace attn
