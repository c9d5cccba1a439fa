#include "cbosp/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "cbosp/error.hpp"
#include "cbosp/expr.hpp"

namespace cbosp {

double rastrigin(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v + 2.5 * (1.0 - std::cos(2.0 * std::numbers::pi * v));
  return sum;
}

namespace {

double squared_norm(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

SaddleData origin_saddle(int d1, int d2) {
  SaddleData s;
  s.x.assign(static_cast<std::size_t>(d1), 0.0);
  s.y.assign(static_cast<std::size_t>(d2), 0.0);
  s.value = 0.0;
  return s;
}

}  // namespace

ObjectiveSpec parse_objective_name(const std::string& name) {
  ObjectiveSpec spec;
  spec.name = name;
  if (name == "quad") {
    spec.family = ObjectiveFamily::kQuadratic;
  } else if (name == "rastrigin") {
    spec.family = ObjectiveFamily::kRastrigin;
  } else if (name == "quad-cross") {
    spec.family = ObjectiveFamily::kQuadratic;
    spec.coupling = 2.0;
  } else if (name == "rastrigin-cross") {
    spec.family = ObjectiveFamily::kRastrigin;
    spec.coupling = 2.0;
  } else if (name.rfind("custom:", 0) == 0) {
    spec.family = ObjectiveFamily::kCustom;
    spec.expression = name.substr(7);
    const Expression expr = Expression::parse(spec.expression);
    spec.d1 = std::max(1, expr.max_x_index());
    spec.d2 = std::max(1, expr.max_y_index());
  } else {
    throw Error("unknown objective name: " + name);
  }
  return spec;
}

Objective make_objective(const ObjectiveSpec& spec) {
  if (spec.d1 < 1 || spec.d2 < 1) throw Error("objective dimensions must be >= 1");

  Objective obj;
  obj.d1 = spec.d1;
  obj.d2 = spec.d2;
  obj.grad_bound = spec.grad_bound;
  obj.hess_bound = spec.hess_bound;
  obj.icp_constants = spec.icp_constants;

  const double c = spec.coupling;
  if (c != 0.0 && spec.d1 != spec.d2)
    throw Error("cross-coupled objectives require d1 == d2");

  switch (spec.family) {
    case ObjectiveFamily::kQuadratic:
      obj.eval = [c](std::span<const double> x, std::span<const double> y) {
        double v = squared_norm(x) - squared_norm(y);
        if (c != 0.0) v -= c * dot(x, y);
        return v;
      };
      break;
    case ObjectiveFamily::kRastrigin:
      obj.eval = [c](std::span<const double> x, std::span<const double> y) {
        double v = rastrigin(x) - rastrigin(y);
        if (c != 0.0) v -= c * dot(x, y);
        return v;
      };
      break;
    case ObjectiveFamily::kCustom: {
      if (spec.expression.empty()) throw Error("custom objective needs an expression");
      auto expr = std::make_shared<const Expression>(Expression::parse(spec.expression));
      if (expr->max_x_index() > spec.d1 || expr->max_y_index() > spec.d2)
        throw Error("expression references coordinates beyond the declared dimensions");
      obj.eval = [expr](std::span<const double> x, std::span<const double> y) {
        return expr->eval(x, y);
      };
      return obj;  // no bounds, no known saddle
    }
  }

  // The separable families are bracketed by their own one-sided parts; the
  // cross term breaks that, so coupled variants carry no bounds.
  if (c == 0.0) {
    if (spec.family == ObjectiveFamily::kQuadratic) {
      obj.lower_bound = [](std::span<const double> y) { return -squared_norm(y); };
      obj.upper_bound = [](std::span<const double> x) { return squared_norm(x); };
    } else {
      obj.lower_bound = [](std::span<const double> y) { return -rastrigin(y); };
      obj.upper_bound = [](std::span<const double> x) { return rastrigin(x); };
    }
  }
  obj.known_saddle = origin_saddle(spec.d1, spec.d2);
  return obj;
}

const std::vector<std::string>& builtin_objective_names() {
  static const std::vector<std::string> names = {"quad", "rastrigin", "quad-cross",
                                                 "rastrigin-cross"};
  return names;
}

}  // namespace cbosp
