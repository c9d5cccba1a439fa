#include "cbosp/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "cbosp/error.hpp"

namespace cbosp {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 output finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// murmur3-style finalizer used to derive per-stream increments. The result
// is forced odd and rejected if its bit pattern is too regular, mirroring
// the SplittableRandom gamma recipe.
std::uint64_t mix_gamma(std::uint64_t z) {
  z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
  z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
  z = (z ^ (z >> 33)) | 1ULL;
  if (std::popcount(z ^ (z >> 1)) < 24) z ^= 0xaaaaaaaaaaaaaaaaULL;
  return z;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : id_(stream_id) {
  const std::uint64_t h = mix64(stream_id * kGolden + 1);
  const std::uint64_t s = mix64(seed ^ h);
  state_ = s;
  gamma_ = mix_gamma(s + kGolden);
}

std::uint64_t RngStream::next_u64() {
  state_ += gamma_;
  return mix64(state_);
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

std::vector<RngStream> spawn_rng_streams(std::uint64_t seed, int n) {
  if (n < 1) throw Error("spawn_rng_streams: n must be >= 1");
  std::vector<RngStream> streams;
  streams.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) streams.emplace_back(seed, static_cast<std::uint64_t>(i));
  return streams;
}

}  // namespace cbosp
