#pragma once

#include <functional>
#include <string>
#include <vector>

#include "uniclf/types.hpp"

namespace uniclf {

/// Control-affine dynamics xdot = f(x) + g(x) u with f(0) = 0.
struct ControlAffineSystem {
  int state_dim = 0;
  int input_dim = 0;
  std::function<StateVector(const StateVector&)> drift;      // f
  std::function<InputMatrix(const StateVector&)> input_map;  // g
};

/// Lyapunov candidate: V together with its analytic gradient.
///
/// V must be positive definite with V(0) = 0 and grad V(0) = 0. Radial
/// unboundedness cannot be checked from evaluators; the built-in entries
/// are quadratic, and tests spot-check growth along rays only.
struct Clf {
  std::function<double(const StateVector&)> value;
  std::function<GradientRow(const StateVector&)> gradient;
};

/// Built-in systems/CLFs addressable from scenario files.
///
/// Ids: "paper_sec5" (2-state system x1' = -x1^3 + e^{x2} u1,
/// x2' = -x2 + u2 with V = (x1^2 + x2^2)/2) and "scalar_sec4"
/// (integrator x' = u with V = x^2/2).
ControlAffineSystem system_from_catalogue(const std::string& id);
Clf clf_from_catalogue(const std::string& id);
std::vector<std::string> catalogue_ids();

}  // namespace uniclf
