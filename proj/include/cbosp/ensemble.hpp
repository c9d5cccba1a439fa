#pragma once

#include <span>
#include <vector>

namespace cbosp {

// Particle positions at one time instant. Storage is flat and particle-major:
// xs holds n*d1 doubles with particle i occupying [i*d1, (i+1)*d1), ys the
// same with d2. xs and ys always describe the same particle count.
struct Ensemble {
  int d1 = 1;
  int d2 = 1;
  std::vector<double> xs;
  std::vector<double> ys;
  double time = 0.0;

  int size() const { return d1 > 0 ? static_cast<int>(xs.size()) / d1 : 0; }

  std::span<const double> x(int i) const {
    return {xs.data() + static_cast<std::size_t>(i) * d1, static_cast<std::size_t>(d1)};
  }
  std::span<double> x(int i) {
    return {xs.data() + static_cast<std::size_t>(i) * d1, static_cast<std::size_t>(d1)};
  }
  std::span<const double> y(int i) const {
    return {ys.data() + static_cast<std::size_t>(i) * d2, static_cast<std::size_t>(d2)};
  }
  std::span<double> y(int i) {
    return {ys.data() + static_cast<std::size_t>(i) * d2, static_cast<std::size_t>(d2)};
  }

  bool finite() const;
};

// Componentwise empirical means, accumulated in particle index order.
std::vector<double> mean_x(const Ensemble& ens);
std::vector<double> mean_y(const Ensemble& ens);

// Gibbs-weighted ensemble averages; each coordinate lies in the componentwise
// hull of the particle positions.
struct ConsensusPoint {
  std::vector<double> x_alpha;
  std::vector<double> y_beta;
};

}  // namespace cbosp
