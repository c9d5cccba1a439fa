#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cbosp {

using EvalFn = std::function<double(std::span<const double>, std::span<const double>)>;
using BoundFn = std::function<double(std::span<const double>)>;

struct SaddleData {
  std::vector<double> x;
  std::vector<double> y;
  double value = 0.0;
};

// Evaluatable payoff E(x, y) together with whatever side information is
// available for it. Bounds, saddle data and derivative constants are all
// optional; consumers degrade gracefully when they are absent.
struct Objective {
  int d1 = 1;
  int d2 = 1;
  EvalFn eval;
  BoundFn lower_bound;  // y -> bound below E(., y); empty when unknown
  BoundFn upper_bound;  // x -> bound above E(x, .); empty when unknown
  std::optional<SaddleData> known_saddle;
  std::optional<double> grad_bound;  // uniform bound on first derivatives
  std::optional<double> hess_bound;  // uniform bound on second derivatives
  std::optional<std::pair<double, double>> icp_constants;  // (eta, nu)

  double operator()(std::span<const double> x, std::span<const double> y) const {
    return eval(x, y);
  }
};

}  // namespace cbosp
