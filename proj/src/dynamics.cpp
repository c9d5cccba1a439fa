#include "cbosp/dynamics.hpp"

#include <cmath>
#include <string>

#include "cbosp/consensus.hpp"
#include "cbosp/error.hpp"

namespace cbosp {

SimStreams::SimStreams(std::uint64_t seed, int n_particles) {
  streams_.reserve(4 * static_cast<std::size_t>(n_particles));
  for (int i = 0; i < n_particles; ++i)
    for (int block = 0; block < 4; ++block)
      streams_.emplace_back(seed, 4 * static_cast<std::uint64_t>(i) + block);
}

namespace {

void check_init_dims(const InitSpec& spec, const Objective& obj) {
  auto want = [](const char* what, std::size_t got, int need) {
    if (got != static_cast<std::size_t>(need))
      throw Error(std::string("init_ensemble: ") + what + " has dimension " +
                  std::to_string(got) + ", objective expects " + std::to_string(need));
  };
  switch (spec.kind) {
    case InitKind::kGaussianProduct:
      want("mean_x", spec.mean_x.size(), obj.d1);
      want("mean_y", spec.mean_y.size(), obj.d2);
      if (!(spec.var_x > 0.0) || !(spec.var_y > 0.0))
        throw Error("init_ensemble: gaussian variances must be positive");
      break;
    case InitKind::kUniformBox:
      want("box_x", spec.box_x.size(), obj.d1);
      want("box_y", spec.box_y.size(), obj.d2);
      for (const auto& [lo, hi] : spec.box_x)
        if (!(lo < hi)) throw Error("init_ensemble: box_x needs lo < hi per coordinate");
      for (const auto& [lo, hi] : spec.box_y)
        if (!(lo < hi)) throw Error("init_ensemble: box_y needs lo < hi per coordinate");
      break;
    case InitKind::kPointCloud:
      for (const auto& pt : spec.points_x) want("points_x entry", pt.size(), obj.d1);
      for (const auto& pt : spec.points_y) want("points_y entry", pt.size(), obj.d2);
      break;
  }
}

}  // namespace

Ensemble init_ensemble(const InitSpec& spec, const Params& p, const Objective& obj,
                       SimStreams& streams) {
  check_init_dims(spec, obj);
  const int n = p.n_particles;

  Ensemble ens;
  ens.d1 = obj.d1;
  ens.d2 = obj.d2;
  ens.time = 0.0;
  ens.xs.resize(static_cast<std::size_t>(n) * obj.d1);
  ens.ys.resize(static_cast<std::size_t>(n) * obj.d2);

  switch (spec.kind) {
    case InitKind::kGaussianProduct: {
      const double sd_x = std::sqrt(spec.var_x);
      const double sd_y = std::sqrt(spec.var_y);
      for (int i = 0; i < n; ++i) {
        auto xi = ens.x(i);
        for (int k = 0; k < obj.d1; ++k)
          xi[static_cast<std::size_t>(k)] = spec.mean_x[static_cast<std::size_t>(k)] + sd_x * streams.init_x(i).normal();
        auto yi = ens.y(i);
        for (int k = 0; k < obj.d2; ++k)
          yi[static_cast<std::size_t>(k)] = spec.mean_y[static_cast<std::size_t>(k)] + sd_y * streams.init_y(i).normal();
      }
      break;
    }
    case InitKind::kUniformBox: {
      for (int i = 0; i < n; ++i) {
        auto xi = ens.x(i);
        for (int k = 0; k < obj.d1; ++k) {
          const auto& [lo, hi] = spec.box_x[static_cast<std::size_t>(k)];
          xi[static_cast<std::size_t>(k)] = lo + (hi - lo) * streams.init_x(i).uniform();
        }
        auto yi = ens.y(i);
        for (int k = 0; k < obj.d2; ++k) {
          const auto& [lo, hi] = spec.box_y[static_cast<std::size_t>(k)];
          yi[static_cast<std::size_t>(k)] = lo + (hi - lo) * streams.init_y(i).uniform();
        }
      }
      break;
    }
    case InitKind::kPointCloud: {
      if (spec.points_x.size() != static_cast<std::size_t>(n) ||
          spec.points_y.size() != static_cast<std::size_t>(n))
        throw Error("init_ensemble: point-cloud size must equal n_particles");
      for (int i = 0; i < n; ++i) {
        auto xi = ens.x(i);
        for (int k = 0; k < obj.d1; ++k) xi[static_cast<std::size_t>(k)] = spec.points_x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        auto yi = ens.y(i);
        for (int k = 0; k < obj.d2; ++k) yi[static_cast<std::size_t>(k)] = spec.points_y[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      }
      break;
    }
  }
  return ens;
}

Ensemble step(const Ensemble& ens, const Params& p, const Objective& obj,
              SimStreams& streams) {
  const ConsensusPoint cp = consensus_point(ens, obj, p.alpha, p.beta);
  const int n = ens.size();
  const double sqrt_dt = std::sqrt(p.dt);

  Ensemble next = ens;
  const long step_index = std::lround(ens.time / p.dt) + 1;
  for (int i = 0; i < n; ++i) {
    auto xi = next.x(i);
    RngStream& rx = streams.step_x(i);
    for (int k = 0; k < ens.d1; ++k) {
      const double offset = xi[static_cast<std::size_t>(k)] - cp.x_alpha[static_cast<std::size_t>(k)];
      xi[static_cast<std::size_t>(k)] += (-p.lambda1 * p.dt + p.sigma1 * sqrt_dt * rx.normal()) * offset;
      if (!std::isfinite(xi[static_cast<std::size_t>(k)]))
        throw NonFiniteError("particle " + std::to_string(i) + " became non-finite at step " +
                                 std::to_string(step_index),
                             i, step_index);
    }
    auto yi = next.y(i);
    RngStream& ry = streams.step_y(i);
    for (int k = 0; k < ens.d2; ++k) {
      const double offset = yi[static_cast<std::size_t>(k)] - cp.y_beta[static_cast<std::size_t>(k)];
      yi[static_cast<std::size_t>(k)] += (-p.lambda2 * p.dt + p.sigma2 * sqrt_dt * ry.normal()) * offset;
      if (!std::isfinite(yi[static_cast<std::size_t>(k)]))
        throw NonFiniteError("particle " + std::to_string(i) + " became non-finite at step " +
                                 std::to_string(step_index),
                             i, step_index);
    }
  }
  next.time = ens.time + p.dt;
  return next;
}

namespace {

int diverged_particle(const Ensemble& ens) {
  const int n = ens.size();
  for (int i = 0; i < n; ++i) {
    for (double v : ens.x(i))
      if (std::abs(v) > kDivergenceLimit) return i;
    for (double v : ens.y(i))
      if (std::abs(v) > kDivergenceLimit) return i;
  }
  return -1;
}

}  // namespace

RunOutput run(const Params& p_in, const Objective& obj, const InitSpec& init,
              const StopRule& stop, int record_every) {
  const Params p = validate_params(p_in);
  if (!stop.max_time && !stop.max_steps)
    throw Error("run: stop rule needs max_time or max_steps");
  if (record_every < 1) throw Error("run: record_every must be >= 1");

  SimStreams streams(p.seed, p.n_particles);
  Ensemble ens = init_ensemble(init, p, obj, streams);

  RunOutput out;
  out.trajectory.push_back(make_record(ens, obj, p, 0));
  RunStatus status = RunStatus::kCompleted;
  int blown_particle = -1;

  long step_index = 0;
  const double time_eps = p.dt * 1e-9;
  for (;;) {
    if (stop.max_steps && step_index >= *stop.max_steps) break;
    if (stop.max_time && ens.time + p.dt > *stop.max_time + time_eps) break;
    if (stop.consensus_tol) {
      const auto [vx, vy] = variances(ens);
      if (vx + vy < *stop.consensus_tol) {
        status = RunStatus::kToleranceReached;
        break;
      }
    }

    ens = step(ens, p, obj, streams);
    ++step_index;
    ens.time = static_cast<double>(step_index) * p.dt;  // no drift accumulation

    blown_particle = diverged_particle(ens);
    if (blown_particle >= 0) {
      status = RunStatus::kDiverged;
      out.trajectory.push_back(make_record(ens, obj, p, step_index));
      break;
    }
    if (step_index % record_every == 0)
      out.trajectory.push_back(make_record(ens, obj, p, step_index));
  }

  if (out.trajectory.back().step != step_index)
    out.trajectory.push_back(make_record(ens, obj, p, step_index));

  const DiagnosticsRecord& last = out.trajectory.back();
  RunSummary& s = out.summary;
  s.status = status;
  s.steps = step_index;
  s.time = ens.time;
  s.final_consensus = last.consensus;
  s.final_mean_x = last.mean_x;
  s.final_mean_y = last.mean_y;
  s.final_var_x = last.var_x;
  s.final_var_y = last.var_y;
  s.diverged_particle = blown_particle;
  return out;
}

}  // namespace cbosp
