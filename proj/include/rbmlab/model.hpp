#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace rbmlab {

using BinaryVector = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;
using BinaryMatrix =
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMajorMatrixXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Bipartite pairwise model over binary {0,1} visible and hidden layers:
//   E(v, h) = -v' W h - b' v - c' h
// Weights are indexed (visible, hidden). Immutable by convention once
// built; every routine below is a pure function of its arguments.
struct RbmModel {
  Eigen::MatrixXd weights;      // n_visible x n_hidden
  Eigen::VectorXd visible_bias; // n_visible
  Eigen::VectorXd hidden_bias;  // n_hidden

  Eigen::Index n_visible() const { return weights.rows(); }
  Eigen::Index n_hidden() const { return weights.cols(); }

  static RbmModel zeros(Eigen::Index n_visible, Eigen::Index n_hidden);

  // Throws DimensionError / DomainError on inconsistent shapes or
  // non-finite entries.
  void validate() const;
};

// One joint state of the two layers.
struct Configuration {
  BinaryVector visible;
  BinaryVector hidden;
};

// max(x,0) + log1p(exp(-|x|)); never overflows.
inline double softplus(double x) {
  double ax = x < 0.0 ? -x : x;
  double m = x > 0.0 ? x : 0.0;
  return m + std::log1p(std::exp(-ax));
}

inline double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Elementwise logistic on an owned vector. All samplers and conditionals
// funnel through this one implementation so that recorded unit means are
// bit-for-bit reproducible from states and model.
void logistic_inplace(Eigen::VectorXd& x);

double energy(const RbmModel& model, const BinaryVector& visible,
              const BinaryVector& hidden);
double energy(const RbmModel& model, const Configuration& cfg);

// Pre-activations; the binary input selects rows/columns of W, accumulated
// in ascending index order.
Eigen::VectorXd hidden_preactivation(const RbmModel& model, const BinaryVector& visible);
Eigen::VectorXd visible_preactivation(const RbmModel& model, const BinaryVector& hidden);

// p(h_a = 1 | v) and p(v_i = 1 | h), componentwise.
Eigen::VectorXd hidden_conditional(const RbmModel& model, const BinaryVector& visible);
Eigen::VectorXd visible_conditional(const RbmModel& model, const BinaryVector& hidden);

// ln sum_h exp(-E(v, h)) = b'v + sum_a softplus((W'v + c)_a).
double visible_free_energy(const RbmModel& model, const BinaryVector& visible);

// Swapped-layer model: (W, b, c) -> (W', c, b). Energies are preserved
// under (v, h) -> (h, v).
RbmModel transposed(const RbmModel& model);

}  // namespace rbmlab
