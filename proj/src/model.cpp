#include "rbmlab/model.hpp"

#include <cmath>

#include "rbmlab/errors.hpp"

namespace rbmlab {

namespace {

void check_binary(const BinaryVector& x, const char* what) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] > 1) throw DomainError(std::string(what) + " entries must be 0 or 1");
  }
}

}  // namespace

RbmModel RbmModel::zeros(Eigen::Index n_visible, Eigen::Index n_hidden) {
  RbmModel m;
  m.weights = Eigen::MatrixXd::Zero(n_visible, n_hidden);
  m.visible_bias = Eigen::VectorXd::Zero(n_visible);
  m.hidden_bias = Eigen::VectorXd::Zero(n_hidden);
  return m;
}

void RbmModel::validate() const {
  if (weights.rows() < 1 || weights.cols() < 1)
    throw DimensionError("model must have at least one visible and one hidden unit");
  if (visible_bias.size() != weights.rows())
    throw DimensionError("visible bias length does not match weight rows");
  if (hidden_bias.size() != weights.cols())
    throw DimensionError("hidden bias length does not match weight columns");
  if (!weights.allFinite() || !visible_bias.allFinite() || !hidden_bias.allFinite())
    throw DomainError("model parameters must be finite");
}

void logistic_inplace(Eigen::VectorXd& x) {
  x = (1.0 + (-x.array()).exp()).inverse().matrix();
}

double energy(const RbmModel& model, const BinaryVector& visible,
              const BinaryVector& hidden) {
  if (visible.size() != model.n_visible() || hidden.size() != model.n_hidden())
    throw DimensionError("configuration shape does not match model");
  check_binary(visible, "visible");
  check_binary(hidden, "hidden");
  double pair = 0.0, field_v = 0.0, field_h = 0.0;
  for (Eigen::Index a = 0; a < model.n_hidden(); ++a) {
    if (!hidden[a]) continue;
    field_h += model.hidden_bias[a];
    const double* col = model.weights.col(a).data();
    for (Eigen::Index i = 0; i < model.n_visible(); ++i)
      if (visible[i]) pair += col[i];
  }
  for (Eigen::Index i = 0; i < model.n_visible(); ++i)
    if (visible[i]) field_v += model.visible_bias[i];
  return -pair - field_v - field_h;
}

double energy(const RbmModel& model, const Configuration& cfg) {
  return energy(model, cfg.visible, cfg.hidden);
}

Eigen::VectorXd hidden_preactivation(const RbmModel& model, const BinaryVector& visible) {
  if (visible.size() != model.n_visible())
    throw DimensionError("visible vector length does not match model");
  check_binary(visible, "visible");
  Eigen::VectorXd pre = model.hidden_bias;
  for (Eigen::Index i = 0; i < model.n_visible(); ++i)
    if (visible[i]) pre += model.weights.row(i).transpose();
  return pre;
}

Eigen::VectorXd visible_preactivation(const RbmModel& model, const BinaryVector& hidden) {
  if (hidden.size() != model.n_hidden())
    throw DimensionError("hidden vector length does not match model");
  check_binary(hidden, "hidden");
  Eigen::VectorXd pre = model.visible_bias;
  for (Eigen::Index a = 0; a < model.n_hidden(); ++a)
    if (hidden[a]) pre += model.weights.col(a);
  return pre;
}

Eigen::VectorXd hidden_conditional(const RbmModel& model, const BinaryVector& visible) {
  Eigen::VectorXd pre = hidden_preactivation(model, visible);
  logistic_inplace(pre);
  return pre;
}

Eigen::VectorXd visible_conditional(const RbmModel& model, const BinaryVector& hidden) {
  Eigen::VectorXd pre = visible_preactivation(model, hidden);
  logistic_inplace(pre);
  return pre;
}

double visible_free_energy(const RbmModel& model, const BinaryVector& visible) {
  Eigen::VectorXd pre = hidden_preactivation(model, visible);
  double field = 0.0;
  for (Eigen::Index i = 0; i < model.n_visible(); ++i)
    if (visible[i]) field += model.visible_bias[i];
  double sum = 0.0;
  for (Eigen::Index a = 0; a < pre.size(); ++a) sum += softplus(pre[a]);
  return field + sum;
}

RbmModel transposed(const RbmModel& model) {
  RbmModel t;
  t.weights = model.weights.transpose();
  t.visible_bias = model.hidden_bias;
  t.hidden_bias = model.visible_bias;
  return t;
}

}  // namespace rbmlab
