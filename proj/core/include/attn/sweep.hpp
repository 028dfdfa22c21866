#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "attn/optimal3.hpp"

namespace attn {

struct SweepRow {
  double kappa = 0.0;
  Regime regime = Regime::NoDisclosure;
  double payoff = 0.0;
  std::optional<double> s_star;      // s*(kappa), empty above kappa = 2
  std::optional<double> slope_used;  // |slope| of the realized policy
  std::optional<double> pi_minus1, pi_plus1;  // downplaying signal
  std::optional<double> pi;                   // exaggeration signal
  bool degenerate = false;
};

// One closed-form solve per kappa on the inclusive uniform grid
// [kappa_min, kappa_max] with `steps` points (steps >= 2).
std::vector<SweepRow> sweep(const Belief& prior, double kappa_min,
                            double kappa_max, int steps);

// CSV with a fixed header, '.' decimal separator, 12 significant digits.
// Columns: kappa,regime,payoff,s_star,slope_used,pi_minus1,pi_plus1,pi,
// degenerate.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// 12-significant-digit formatting shared by the CSV and text renderers.
std::string format_number(double v);

}  // namespace attn
