#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cbosp/objective.hpp"

namespace cbosp {

struct GridMinimaxResult {
  std::vector<double> x_star;  // argmin_x max_y over grid points
  std::vector<double> y_star;  // argmax_y min_x over grid points
  double minimax = 0.0;
  double maximin = 0.0;
  bool certified = false;  // |minimax - maximin| <= certificate_tol
  double certificate_tol = 0.0;
};

// Exhaustive min-max / max-min evaluation on a dense grid. The box lists one
// [lo, hi] interval per coordinate, x coordinates first. Each axis uses
// ceil(width / resolution) + 1 points including both endpoints, so spacing
// never exceeds the requested resolution and the grid is independent of
// floating accumulation. The saddle certificate uses a tolerance of
// 5 * resolution. Requires d1 + d2 <= 4.
GridMinimaxResult grid_minimax(const Objective& obj,
                               std::span<const std::pair<double, double>> box,
                               double resolution);

// Direct-summation weighted mean, long-double accumulation and no exponent
// shifting: an independent cross-check for the stabilized consensus at
// moderate exponents. Requires gamma * range(values) <= 700.
std::vector<double> laplace_reference(const std::vector<std::vector<double>>& positions,
                                      std::span<const double> values, double gamma,
                                      int sign);

}  // namespace cbosp
