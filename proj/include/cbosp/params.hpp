#pragma once

#include <cstdint>

namespace cbosp {

// Scalar hyperparameters of the particle dynamics.
struct Params {
  double lambda1 = 1.0;  // drift rate, x-dynamics
  double lambda2 = 1.0;  // drift rate, y-dynamics
  double sigma1 = 0.0;   // diffusion strength, x
  double sigma2 = 0.0;   // diffusion strength, y
  double alpha = 1.0;    // minimization weight exponent
  double beta = 1.0;     // maximization weight exponent
  double dt = 0.1;       // time step
  int n_particles = 20;
  double t_final = 4.0;  // horizon
  std::uint64_t seed = 0;
};

// Returns p unchanged when every constraint holds; otherwise throws Error
// naming the first violated field. Total over all finite (or non-finite)
// inputs: never aborts.
Params validate_params(const Params& p);

}  // namespace cbosp
