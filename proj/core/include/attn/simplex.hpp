#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "attn/errors.hpp"

namespace attn {

// Finite state set. States are scalars theta_1 < ... < theta_K in the main
// model, or pairwise-distinct vectors in R^J in the generalized model.
class StateSpace {
 public:
  explicit StateSpace(std::vector<double> scalar_states);
  explicit StateSpace(Eigen::MatrixXd vector_states);  // rows are states, K x J

  int num_states() const { return static_cast<int>(states_.rows()); }
  int dim() const { return static_cast<int>(states_.cols()); }
  bool is_scalar() const { return dim() == 1; }

  double state(int k) const;  // scalar case only
  Eigen::VectorXd state_vector(int k) const { return states_.row(k); }
  const Eigen::MatrixXd& states() const { return states_; }

  // The three-state model everything in optimal3/search is built on.
  bool is_canonical_three() const;
  static StateSpace canonical3() { return StateSpace({-1.0, 0.0, 1.0}); }

  bool operator==(const StateSpace& other) const {
    return states_.rows() == other.states_.rows() &&
           states_.cols() == other.states_.cols() && states_ == other.states_;
  }

 private:
  Eigen::MatrixXd states_;
};

// Probability vector over the state set, entry k = P(theta_k). Construction
// normalizes sums that are off by less than 1e-9 and rejects anything worse;
// entries below -1e-12 are rejected, tiny negatives are clamped to zero.
class Belief {
 public:
  explicit Belief(Eigen::VectorXd probs);
  static Belief dirac(int k, int num_states);
  static Belief uniform(int num_states);

  const Eigen::VectorXd& probs() const { return probs_; }
  double operator[](int k) const { return probs_[k]; }
  int size() const { return static_cast<int>(probs_.size()); }

 private:
  Eigen::VectorXd probs_;
};

// Mirror over the middle state: reverses the probability vector. Used for the
// a_mu < 0 reflection in the three-state solver.
Belief mirror(const Belief& b);

// Chart for the three-state simplex: a is the induced action E theta, z the
// probability of the middle state 0. The triangle
//   B = { (a, z) : z in [0,1], |a| <= 1 - z }
// is the image of the simplex.
struct AZPoint {
  double a = 0.0;
  double z = 0.0;
};

// Closed membership test with 1e-12 absolute slack so boundary beliefs on the
// segments L, R, D validate.
bool az_in_triangle(const AZPoint& p);

// nu_(a,z) = z*delta_0 + (1-z+a)/2 * delta_1 + (1-z-a)/2 * delta_{-1}.
Belief belief_from_az(const AZPoint& p, const StateSpace& space);
AZPoint az_from_belief(const Belief& b, const StateSpace& space);

// Coordinates of b in the affine hull of `vertices`: least-squares solve of
// sum_i lambda_i v_i = b, sum_i lambda_i = 1. Returns nullopt when b is not
// in the convex hull (negative coordinate or residual above 1e-9). Vertices
// must be affinely independent.
std::optional<Eigen::VectorXd> barycentric(const Belief& b,
                                           const std::vector<Belief>& vertices);

// True iff the difference vectors {v_i - v_1} are linearly independent.
// Rank test with singular-value cutoff 1e-10 relative to the largest one.
bool affinely_independent(const std::vector<Belief>& beliefs);

}  // namespace attn
