#include "cbosp/ensemble.hpp"

#include <cmath>

namespace cbosp {

bool Ensemble::finite() const {
  for (double v : xs)
    if (!std::isfinite(v)) return false;
  for (double v : ys)
    if (!std::isfinite(v)) return false;
  return true;
}

namespace {

std::vector<double> column_mean(const std::vector<double>& flat, int dim, int n) {
  std::vector<double> mean(static_cast<std::size_t>(dim), 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < dim; ++k) mean[static_cast<std::size_t>(k)] += flat[static_cast<std::size_t>(i) * dim + k];
  for (double& m : mean) m /= n;
  return mean;
}

}  // namespace

std::vector<double> mean_x(const Ensemble& ens) { return column_mean(ens.xs, ens.d1, ens.size()); }

std::vector<double> mean_y(const Ensemble& ens) { return column_mean(ens.ys, ens.d2, ens.size()); }

}  // namespace cbosp
