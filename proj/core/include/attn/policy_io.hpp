#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "attn/policy.hpp"

namespace attn {

// JSON policy file:
//   { "states": [...], "prior": [...],
//     "support": [[...], ...], "weights": [...] }
// Probabilities are plain decimal numbers; NaN, infinities and negative
// entries are rejected.
struct PolicyFile {
  StateSpace states;
  Belief prior;
  std::vector<Belief> support;
  Eigen::VectorXd weights;
};

PolicyFile parse_policy_json(const nlohmann::json& j);
PolicyFile read_policy_file(const std::string& path);

nlohmann::json policy_to_json(const InformationPolicy& p,
                              const QuadraticModel& m);
void write_policy_file(const std::string& path, const InformationPolicy& p,
                       const QuadraticModel& m);

}  // namespace attn
