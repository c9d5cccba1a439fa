#include "cbosp/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cbosp/error.hpp"

namespace cbosp {

double log_weight_sum(std::span<const double> values, double gamma, int sign) {
  if (values.empty()) throw Error("log_weight_sum: empty value list");
  const double s = sign < 0 ? -1.0 : 1.0;
  double shift = -std::numeric_limits<double>::infinity();
  for (double v : values) shift = std::max(shift, s * gamma * v);
  if (!std::isfinite(shift)) throw Error("log_weight_sum: exponent overflow");
  double acc = 0.0;
  for (double v : values) acc += std::exp(s * gamma * v - shift);
  return shift + std::log(acc);
}

std::vector<double> weighted_position_mean(std::span<const double> positions, int dim,
                                           std::span<const double> values, double gamma,
                                           int sign) {
  const std::size_t n = values.size();
  if (n == 0) throw Error("weighted_position_mean: empty ensemble");
  const double s = sign < 0 ? -1.0 : 1.0;

  double shift = -std::numeric_limits<double>::infinity();
  for (double v : values) shift = std::max(shift, s * gamma * v);
  if (!std::isfinite(shift)) throw Error("weighted_position_mean: exponent overflow");

  std::vector<double> acc(static_cast<std::size_t>(dim), 0.0);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = std::exp(s * gamma * values[i] - shift);
    norm += w;
    const double* p = positions.data() + i * static_cast<std::size_t>(dim);
    for (int k = 0; k < dim; ++k) acc[static_cast<std::size_t>(k)] += w * p[k];
  }
  for (double& a : acc) a /= norm;
  return acc;
}

namespace {

std::vector<double> eval_against_mean(const Ensemble& ens, const Objective& obj,
                                      std::span<const double> fixed, bool x_side) {
  const int n = ens.size();
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double v = x_side ? obj.eval(ens.x(i), fixed) : obj.eval(fixed, ens.y(i));
    if (!std::isfinite(v))
      throw NonFiniteError("objective evaluation is not finite at particle " +
                               std::to_string(i),
                           i);
    values[static_cast<std::size_t>(i)] = v;
  }
  return values;
}

}  // namespace

std::vector<double> eval_x_values(const Ensemble& ens, const Objective& obj,
                                  std::span<const double> ybar) {
  return eval_against_mean(ens, obj, ybar, true);
}

std::vector<double> eval_y_values(const Ensemble& ens, const Objective& obj,
                                  std::span<const double> xbar) {
  return eval_against_mean(ens, obj, xbar, false);
}

std::vector<double> consensus_x(const Ensemble& ens, const Objective& obj, double alpha) {
  const std::vector<double> ybar = mean_y(ens);
  const std::vector<double> values = eval_x_values(ens, obj, ybar);
  return weighted_position_mean(ens.xs, ens.d1, values, alpha, -1);
}

std::vector<double> consensus_y(const Ensemble& ens, const Objective& obj, double beta) {
  const std::vector<double> xbar = mean_x(ens);
  const std::vector<double> values = eval_y_values(ens, obj, xbar);
  return weighted_position_mean(ens.ys, ens.d2, values, beta, +1);
}

ConsensusPoint consensus_point(const Ensemble& ens, const Objective& obj, double alpha,
                               double beta) {
  ConsensusPoint cp;
  cp.x_alpha = consensus_x(ens, obj, alpha);
  cp.y_beta = consensus_y(ens, obj, beta);
  return cp;
}

}  // namespace cbosp
