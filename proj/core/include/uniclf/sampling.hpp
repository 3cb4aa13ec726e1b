#pragma once

#include <cstdint>
#include <random>

#include "uniclf/types.hpp"

namespace uniclf {

/// Deterministic uniform sampler over a centered hypercube. The engine is
/// std::mt19937_64 with a fixed bit-to-double mapping, so a seed pins the
/// sequence regardless of standard-library distribution internals.
class UniformStateSampler {
 public:
  UniformStateSampler(int dim, double half_width, std::uint64_t seed)
      : dim_(dim), half_width_(half_width), engine_(seed) {}

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  StateVector next() {
    StateVector x(dim_);
    for (int i = 0; i < dim_; ++i) {
      x[i] = uniform(-half_width_, half_width_);
    }
    return x;
  }

 private:
  int dim_;
  double half_width_;
  std::mt19937_64 engine_;
};

}  // namespace uniclf
