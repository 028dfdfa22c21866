#pragma once

#include "attn/policy.hpp"

namespace attn {

enum class OracleVerdict { IC, NotIC, Inconclusive };

const char* verdict_name(OracleVerdict v);

// Brute-force check of p in G*(p): maximize the agent's value over garblings
// of p, discretized to a barycentric lattice over supp(p).
struct OracleReport {
  double best_value = 0.0;            // LP optimum of E_q[U_A]
  double full_attention_value = 0.0;  // E_p[U_A]
  double gap = 0.0;                   // best - full, >= 0 up to rounding
  OracleVerdict verdict = OracleVerdict::Inconclusive;
  InformationPolicy best_garbling;
  int grid_resolution = 0;
  double tolerance = 0.0;
  int lp_columns = 0;
  int lp_iterations = 0;
};

// Solves max sum_g w_g U_A(nu_g) over lattice beliefs nu_g subject to
// sum_g w_g nu_g = mu, w >= 0. The lattice is
//   { sum_i (k_i / grid) nu_i : k in N^N, sum k_i = grid }
// over the support of p, plus the conditional-mean pooling point of every
// support pair, so the deviations behind the order-IC proof are always
// representable. p must be nonredundant. tol < 0 selects the default
// 1e-6 * (1 + |full_attention_value|).
OracleReport best_garbling_lp(const InformationPolicy& p,
                              const QuadraticModel& m, int grid,
                              double tol = -1.0);

// Refinement-checked verdict: solves at `grid` and `2 * grid` (the lattices
// nest). Inconclusive when doubling moves the gap by more than tol, else IC
// or NotIC from the finer solve.
OracleReport ic_via_oracle(const InformationPolicy& p, const QuadraticModel& m,
                           int grid, double tol = -1.0);

}  // namespace attn
