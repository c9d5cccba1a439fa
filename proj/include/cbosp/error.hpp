#pragma once

#include <stdexcept>
#include <string>

namespace cbosp {

// Base error for invalid inputs, malformed configs and numerical failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An objective evaluation or a particle position came out NaN/Inf.
// Carries the offending particle index and, when known, the step.
class NonFiniteError : public Error {
 public:
  NonFiniteError(const std::string& what, int particle, long step = -1)
      : Error(what), particle_(particle), step_(step) {}

  int particle() const { return particle_; }
  long step() const { return step_; }

 private:
  int particle_;
  long step_;
};

}  // namespace cbosp
