#pragma once

#include <span>
#include <vector>

#include "cbosp/ensemble.hpp"
#include "cbosp/objective.hpp"

namespace cbosp {

// log sum_i exp(sign * gamma * values[i]), computed with the extremal
// exponent shifted out so arbitrarily large gamma cannot overflow. Exact for
// a single element. Throws on an empty list.
double log_weight_sum(std::span<const double> values, double gamma, int sign);

// Stabilized Gibbs-weighted mean of flat particle-major positions:
//   sum_i p_i w_i / sum_i w_i,  w_i = exp(sign * gamma * values[i]),
// with the weights rescaled by the extremal exponent before exponentiation.
// The rescaling cancels in the quotient, so the result equals the unshifted
// mean in exact arithmetic. Accumulation runs in particle index order;
// particles whose value ties the extremum share equal weights, so an exact
// tie yields their unweighted mean.
std::vector<double> weighted_position_mean(std::span<const double> positions, int dim,
                                           std::span<const double> values, double gamma,
                                           int sign);

// Objective values backing the weights: x-side evaluates E(X^i, ybar), y-side
// E(xbar, Y^i). Throws NonFiniteError naming the particle on a bad evaluation.
std::vector<double> eval_x_values(const Ensemble& ens, const Objective& obj,
                                  std::span<const double> ybar);
std::vector<double> eval_y_values(const Ensemble& ens, const Objective& obj,
                                  std::span<const double> xbar);

// Weighted ensemble averages with weights exp(-alpha E(X^i, ybar)) on the
// x-side and exp(+beta E(xbar, Y^i)) on the y-side, the opposite marginal
// entering only through its plain mean.
std::vector<double> consensus_x(const Ensemble& ens, const Objective& obj, double alpha);
std::vector<double> consensus_y(const Ensemble& ens, const Objective& obj, double beta);

// Both components from the same snapshot (the means feeding each side are
// taken before either update).
ConsensusPoint consensus_point(const Ensemble& ens, const Objective& obj, double alpha,
                               double beta);

}  // namespace cbosp
