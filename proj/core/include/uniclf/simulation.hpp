#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uniclf/formulas.hpp"

namespace uniclf {

using ControlLaw = std::function<ControllerOutput(const ClfData&)>;

enum class LawKind { Sontag, LinSontag, Unified, OptBased };

/// Binds a named law to a concrete ControlLaw. Unified uses the strategy;
/// OptBased uses the cost weight m; the others ignore both.
ControlLaw make_control_law(LawKind kind, const ScalingStrategy& strategy,
                            double m);

struct TrajectorySample {
  double t = 0.0;
  StateVector x;
  ControlVector u;
  std::optional<double> kappa;
  double v = 0.0;
  double cost_rate = 0.0;
  double cost_cum = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  bool truncated = false;  // a controller domain error cut the run short
  std::string truncation_reason;
};

struct SimConfig {
  double t_end = 10.0;
  double h = 1e-3;
  StateVector x0;
  ControlLaw law;
  double m = 10.0;         // cost weight in the recorded running cost
  double margin_xi = 0.0;  // inputs scaled by (1 + xi), no re-saturation
};

/// Fixed-step classical RK4 integration of xdot = f + g (1+xi) u(x), with
/// the law re-evaluated at every stage state. Records one sample per step;
/// cumulative cost by trapezoidal accumulation. Controller domain errors
/// truncate the trajectory with an annotation; a non-finite state raises
/// divergence_error.
Trajectory simulate(const ControlAffineSystem& system, const Clf& clf,
                    const SimConfig& cfg);

/// Wraps a law so it emits (1 + xi) times the base input. xi >= -1.
ControlLaw scaled_controller(ControlLaw base, double xi);

struct DecreaseViolation {
  enum class Kind { ValueIncrease, RateBound };
  std::size_t sample_index = 0;
  Kind kind = Kind::ValueIncrease;
  double magnitude = 0.0;
};

struct DecreaseReport {
  std::vector<DecreaseViolation> violations;
  bool clean() const { return violations.empty(); }
};

/// Checks V(x_{k+1}) < V(x_k) whenever ||x_k|| > 1e-6, and for kappa-carrying
/// samples the pointwise rate bound a + b u <= -kappa sigma + 1e-8.
DecreaseReport check_clf_decrease(const Trajectory& traj,
                                  const ControlAffineSystem& system,
                                  const Clf& clf);

struct RadialProbePoint {
  double radius = 0.0;
  double max_input_norm = 0.0;
};

/// Max input norm over random states on each sphere ||x|| = r.
std::vector<RadialProbePoint> origin_continuity_probe(
    const ControlLaw& law, const ControlAffineSystem& system, const Clf& clf,
    const std::vector<double>& radii, int samples_per_radius,
    std::uint64_t seed = 0);

struct SlopeProbePoint {
  double x = 0.0;
  double left_slope = 0.0;
  double right_slope = 0.0;
  bool skipped = false;  // stencil would cross the origin
};

/// One-sided finite-difference slopes of a scalar kappa(x).
std::vector<SlopeProbePoint> smoothness_probe(
    const std::function<double(double)>& kappa_fn,
    const std::vector<double>& x_points, double fd_step);

}  // namespace uniclf
