#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cbosp/diagnostics.hpp"
#include "cbosp/ensemble.hpp"
#include "cbosp/objective.hpp"
#include "cbosp/params.hpp"
#include "cbosp/rng.hpp"

namespace cbosp {

enum class InitKind { kGaussianProduct, kUniformBox, kPointCloud };

// Initial distribution. The default draws x and y blocks from independent
// isotropic Gaussians (a product measure).
struct InitSpec {
  InitKind kind = InitKind::kGaussianProduct;
  std::vector<double> mean_x{0.0};
  std::vector<double> mean_y{0.0};
  double var_x = 1.0;  // isotropic variance, gaussian-product
  double var_y = 1.0;
  std::vector<std::pair<double, double>> box_x;  // per-coordinate [lo, hi]
  std::vector<std::pair<double, double>> box_y;
  std::vector<std::vector<double>> points_x;  // point-cloud positions
  std::vector<std::vector<double>> points_y;
};

struct StopRule {
  std::optional<double> max_time;
  std::optional<double> consensus_tol;  // stop once var_x + var_y drops below
  std::optional<long> max_steps;
};

enum class RunStatus { kCompleted, kToleranceReached, kDiverged };

struct RunSummary {
  RunStatus status = RunStatus::kCompleted;
  long steps = 0;
  double time = 0.0;
  ConsensusPoint final_consensus;
  std::vector<double> final_mean_x;
  std::vector<double> final_mean_y;
  double final_var_x = 0.0;
  double final_var_y = 0.0;
  int diverged_particle = -1;  // set when status == kDiverged
};

struct RunOutput {
  std::vector<DiagnosticsRecord> trajectory;
  RunSummary summary;
};

// Four independent streams per particle: separate blocks for the initial
// draw and the per-step noise of each coordinate group, so draws for
// particle i never depend on N or on the other particles.
class SimStreams {
 public:
  SimStreams(std::uint64_t seed, int n_particles);

  RngStream& init_x(int i) { return streams_[4 * static_cast<std::size_t>(i) + 0]; }
  RngStream& init_y(int i) { return streams_[4 * static_cast<std::size_t>(i) + 1]; }
  RngStream& step_x(int i) { return streams_[4 * static_cast<std::size_t>(i) + 2]; }
  RngStream& step_y(int i) { return streams_[4 * static_cast<std::size_t>(i) + 3]; }

 private:
  std::vector<RngStream> streams_;
};

// Positions above this magnitude are treated as numerical blow-up.
inline constexpr double kDivergenceLimit = 1e12;

// N i.i.d. draws from the spec; time = 0. Throws on a dimension mismatch
// with the objective.
Ensemble init_ensemble(const InitSpec& spec, const Params& p, const Objective& obj,
                       SimStreams& streams);

// One Euler-Maruyama update. Both consensus components are computed once
// from the incoming ensemble and shared by the x- and y-updates; each
// coordinate then moves by
//   -lambda dt (v - c) + sigma sqrt(dt) (v - c) xi,   xi ~ N(0,1).
// Throws NonFiniteError naming particle and step if an update produces a
// non-finite position.
Ensemble step(const Ensemble& ens, const Params& p, const Objective& obj,
              SimStreams& streams);

// Full integration loop: records diagnostics every record_every steps (and
// always at the first and last step), stops on the first rule that fires.
// Blow-up beyond kDivergenceLimit ends the run with status kDiverged rather
// than an exception.
RunOutput run(const Params& p, const Objective& obj, const InitSpec& init,
              const StopRule& stop, int record_every = 1);

}  // namespace cbosp
