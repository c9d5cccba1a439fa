#pragma once

#include <cstdint>
#include <vector>

namespace cbosp {

// Splittable PRNG stream (splitmix-style: 64-bit Weyl state plus a per-stream
// odd increment). A stream is fully determined by (seed, stream_id): the same
// pair always reproduces the same sequence, and distinct ids give
// statistically independent streams. State is 16 bytes, so per-particle
// stream tables stay cheap even at N = 10^4.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform_open();

  // Standard normal draw via Box-Muller; one uniform pair yields two normals,
  // the second is cached so draw counts stay deterministic.
  double normal();

  std::uint64_t stream_id() const { return id_; }

 private:
  std::uint64_t state_;
  std::uint64_t gamma_;
  std::uint64_t id_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// n streams with ids 0..n-1 derived from one master seed. Stream i depends
// only on (seed, i), never on n, so growing an ensemble does not perturb the
// draws of existing indices.
std::vector<RngStream> spawn_rng_streams(std::uint64_t seed, int n);

}  // namespace cbosp
