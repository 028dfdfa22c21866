#include "attn/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace attn {

namespace {

constexpr double kSumNormalizeTol = 1e-9;
constexpr double kEntryClampTol = 1e-12;
constexpr double kTriangleSlack = 1e-12;
constexpr double kBarycentricResidual = 1e-9;
constexpr double kRankRelTol = 1e-10;

}  // namespace

StateSpace::StateSpace(std::vector<double> scalar_states) {
  const int k = static_cast<int>(scalar_states.size());
  if (k < 2) fail(Errc::BadInput, "need at least two states");
  for (int i = 0; i + 1 < k; ++i) {
    if (!(scalar_states[i] < scalar_states[i + 1]))
      fail(Errc::BadInput, "scalar states must be strictly increasing");
  }
  for (double s : scalar_states) {
    if (!std::isfinite(s)) fail(Errc::BadInput, "states must be finite");
  }
  states_.resize(k, 1);
  for (int i = 0; i < k; ++i) states_(i, 0) = scalar_states[i];
}

StateSpace::StateSpace(Eigen::MatrixXd vector_states)
    : states_(std::move(vector_states)) {
  if (states_.rows() < 2) fail(Errc::BadInput, "need at least two states");
  if (states_.cols() < 1) fail(Errc::BadInput, "states need a dimension");
  if (!states_.allFinite()) fail(Errc::BadInput, "states must be finite");
  for (int i = 0; i < states_.rows(); ++i) {
    for (int j = i + 1; j < states_.rows(); ++j) {
      if ((states_.row(i) - states_.row(j)).lpNorm<Eigen::Infinity>() == 0.0)
        fail(Errc::BadInput, "vector states must be pairwise distinct");
    }
  }
}

double StateSpace::state(int k) const {
  if (!is_scalar()) fail(Errc::WrongStateSpace, "state set is not scalar");
  return states_(k, 0);
}

bool StateSpace::is_canonical_three() const {
  return num_states() == 3 && is_scalar() && states_(0, 0) == -1.0 &&
         states_(1, 0) == 0.0 && states_(2, 0) == 1.0;
}

Belief::Belief(Eigen::VectorXd probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) fail(Errc::BadInput, "belief needs >= 2 entries");
  if (!probs_.allFinite()) fail(Errc::BadInput, "belief entries must be finite");
  for (int i = 0; i < probs_.size(); ++i) {
    if (probs_[i] < -kEntryClampTol)
      fail(Errc::BadInput, "belief entry " + std::to_string(i) +
                               " is negative: " + std::to_string(probs_[i]));
    if (probs_[i] < 0.0) probs_[i] = 0.0;
  }
  const double sum = probs_.sum();
  if (std::abs(sum - 1.0) > kSumNormalizeTol)
    fail(Errc::BadInput,
         "belief sums to " + std::to_string(sum) + ", not within 1e-9 of 1");
  probs_ /= sum;
}

Belief Belief::dirac(int k, int num_states) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(num_states);
  v[k] = 1.0;
  return Belief(std::move(v));
}

Belief Belief::uniform(int num_states) {
  return Belief(Eigen::VectorXd::Constant(num_states, 1.0 / num_states));
}

Belief mirror(const Belief& b) {
  return Belief(b.probs().reverse());
}

bool az_in_triangle(const AZPoint& p) {
  if (p.z < -kTriangleSlack || p.z > 1.0 + kTriangleSlack) return false;
  return std::abs(p.a) <= 1.0 - p.z + kTriangleSlack;
}

Belief belief_from_az(const AZPoint& p, const StateSpace& space) {
  if (!space.is_canonical_three())
    fail(Errc::WrongStateSpace, "(a,z) chart requires states {-1, 0, 1}");
  if (!az_in_triangle(p))
    fail(Errc::OutOfSimplex, "(a, z) = (" + std::to_string(p.a) + ", " +
                                 std::to_string(p.z) + ") is outside the triangle");
  Eigen::VectorXd probs(3);
  probs << (1.0 - p.z - p.a) / 2.0, p.z, (1.0 - p.z + p.a) / 2.0;
  return Belief(std::move(probs));
}

AZPoint az_from_belief(const Belief& b, const StateSpace& space) {
  if (!space.is_canonical_three())
    fail(Errc::WrongStateSpace, "(a,z) chart requires states {-1, 0, 1}");
  if (b.size() != 3) fail(Errc::WrongStateSpace, "belief is not three-state");
  return AZPoint{b[2] - b[0], b[1]};
}

std::optional<Eigen::VectorXd> barycentric(
    const Belief& b, const std::vector<Belief>& vertices) {
  if (vertices.empty()) fail(Errc::BadInput, "no vertices");
  const int k = b.size();
  const int m = static_cast<int>(vertices.size());
  for (const Belief& v : vertices) {
    if (v.size() != k) fail(Errc::BadInput, "vertex dimension mismatch");
  }
  if (!affinely_independent(vertices))
    fail(Errc::DegenerateVertices, "vertices are affinely dependent");

  // Affine system: rows are the K probability constraints plus sum = 1.
  Eigen::MatrixXd a(k + 1, m);
  for (int j = 0; j < m; ++j) {
    a.col(j).head(k) = vertices[j].probs();
    a(k, j) = 1.0;
  }
  Eigen::VectorXd rhs(k + 1);
  rhs.head(k) = b.probs();
  rhs[k] = 1.0;

  Eigen::VectorXd lambda = a.colPivHouseholderQr().solve(rhs);
  if (lambda.minCoeff() < -kBarycentricResidual) return std::nullopt;
  for (int j = 0; j < m; ++j) lambda[j] = std::max(lambda[j], 0.0);
  lambda /= lambda.sum();

  Eigen::VectorXd recon = Eigen::VectorXd::Zero(k);
  for (int j = 0; j < m; ++j) recon += lambda[j] * vertices[j].probs();
  if ((recon - b.probs()).lpNorm<Eigen::Infinity>() > kBarycentricResidual)
    return std::nullopt;
  return lambda;
}

bool affinely_independent(const std::vector<Belief>& beliefs) {
  if (beliefs.empty()) fail(Errc::BadInput, "empty belief list");
  const int m = static_cast<int>(beliefs.size());
  if (m == 1) return true;
  const int k = beliefs[0].size();
  if (m - 1 > k) return false;

  Eigen::MatrixXd diff(k, m - 1);
  for (int j = 1; j < m; ++j)
    diff.col(j - 1) = beliefs[j].probs() - beliefs[0].probs();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return false;
  return sv[sv.size() - 1] > kRankRelTol * sv[0];
}

}  // namespace attn
