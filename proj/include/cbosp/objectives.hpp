#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cbosp/objective.hpp"

namespace cbosp {

// R(x) = sum_k [x_k^2 + 5/2 (1 - cos(2 pi x_k))]; nonnegative, zero only at
// the origin, local minima near the integer lattice.
double rastrigin(std::span<const double> x);

enum class ObjectiveFamily { kQuadratic, kRastrigin, kCustom };

struct ObjectiveSpec {
  std::string name = "quad";
  int d1 = 1;
  int d2 = 1;
  // Coefficient c of the bilinear cross term -c*<x,y>; 0 when absent.
  double coupling = 0.0;
  ObjectiveFamily family = ObjectiveFamily::kQuadratic;
  std::string expression;  // kCustom only
  std::optional<double> grad_bound;
  std::optional<double> hess_bound;
  std::optional<std::pair<double, double>> icp_constants;
};

// Accepts "quad", "rastrigin", "quad-cross", "rastrigin-cross" or
// "custom:<expression>". Cross variants get coupling 2; custom dimensions
// are inferred from the highest coordinate indices in the expression.
ObjectiveSpec parse_objective_name(const std::string& name);

// Builds the payoff for a spec. Families without a cross term carry separable
// bounds and the origin saddle; cross-coupled families keep the origin saddle
// but no bounds; custom expressions carry neither.
Objective make_objective(const ObjectiveSpec& spec);

const std::vector<std::string>& builtin_objective_names();

}  // namespace cbosp
