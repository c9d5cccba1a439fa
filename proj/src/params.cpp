#include "cbosp/params.hpp"

#include <cmath>

#include "cbosp/error.hpp"

namespace cbosp {

namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }
bool finite_nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

Params validate_params(const Params& p) {
  if (!finite_positive(p.dt)) throw Error("dt must be positive");
  if (!finite_positive(p.t_final) || p.t_final < p.dt)
    throw Error("t_final must be >= dt");
  if (p.n_particles < 1) throw Error("n_particles must be >= 1");
  if (!finite_positive(p.lambda1)) throw Error("lambda1 must be positive");
  if (!finite_positive(p.lambda2)) throw Error("lambda2 must be positive");
  if (!finite_positive(p.alpha)) throw Error("alpha must be positive");
  if (!finite_positive(p.beta)) throw Error("beta must be positive");
  if (!finite_nonnegative(p.sigma1)) throw Error("sigma1 must be nonnegative");
  if (!finite_nonnegative(p.sigma2)) throw Error("sigma2 must be nonnegative");
  return p;
}

}  // namespace cbosp
