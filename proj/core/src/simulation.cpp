#include "uniclf/simulation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "uniclf/sampling.hpp"

namespace uniclf {

namespace {

// States this close to the origin get u = 0 (the formulas' origin limit)
// instead of evaluating kappa ratios at the singular point.
constexpr double kOriginSnapNorm = 1e-9;

ControllerOutput origin_output(int input_dim) {
  ControllerOutput out;
  out.u = ControlVector::Zero(input_dim);
  out.branch = Branch::ZeroB;
  out.feasible = true;
  return out;
}

double cost_rate_of(const ControllerOutput& out, double m) {
  const double input_energy = out.u.squaredNorm();
  if (out.kappa.has_value()) {
    const double mod = 1.0 - *out.kappa;
    return 0.5 * (input_energy + m * mod * mod);
  }
  return 0.5 * input_energy;
}

}  // namespace

ControlLaw make_control_law(LawKind kind, const ScalingStrategy& strategy,
                            double m) {
  switch (kind) {
    case LawKind::Sontag:
      return [](const ClfData& data) { return sontag(data); };
    case LawKind::LinSontag:
      return [](const ClfData& data) { return lin_sontag(data); };
    case LawKind::Unified:
      return [strategy](const ClfData& data) {
        if (data.b_is_zero()) {
          return unified(data, 1.0);
        }
        return unified(data, kappa_strategy(data, strategy));
      };
    case LawKind::OptBased:
      return [m](const ClfData& data) { return opt_universal(data, m); };
  }
  throw std::invalid_argument("make_control_law: unknown law kind");
}

ControlLaw scaled_controller(ControlLaw base, double xi) {
  if (xi < -1.0) {
    throw std::domain_error("scaled_controller requires xi >= -1");
  }
  return [base = std::move(base), xi](const ClfData& data) {
    ControllerOutput out = base(data);
    out.u *= (1.0 + xi);
    return out;
  };
}

Trajectory simulate(const ControlAffineSystem& system, const Clf& clf,
                    const SimConfig& cfg) {
  if (!cfg.law) {
    throw config_error("simulate: no control law configured");
  }
  if (cfg.x0.size() != system.state_dim) {
    throw config_error("simulate: x0 length does not match the system");
  }
  if (cfg.h <= 0.0 || cfg.t_end <= 0.0 || cfg.h > cfg.t_end) {
    throw config_error("simulate: need 0 < h <= t_end");
  }

  const ControlLaw law = cfg.margin_xi != 0.0
                             ? scaled_controller(cfg.law, cfg.margin_xi)
                             : cfg.law;
  auto eval = [&](const StateVector& x) -> ControllerOutput {
    if (x.norm() <= kOriginSnapNorm) {
      return origin_output(system.input_dim);
    }
    return law(lie_data(system, clf, x));
  };
  auto field = [&](const StateVector& x, const ControllerOutput& out) {
    return StateVector(system.drift(x) + system.input_map(x) * out.u);
  };

  const long steps = std::lround(cfg.t_end / cfg.h);
  Trajectory traj;
  traj.samples.reserve(static_cast<std::size_t>(steps) + 1);

  StateVector x = cfg.x0;
  ControllerOutput out;
  try {
    out = eval(x);
  } catch (const std::domain_error& e) {
    traj.truncated = true;
    traj.truncation_reason = e.what();
    return traj;
  }
  double rate = cost_rate_of(out, cfg.m);
  traj.samples.push_back({0.0, x, out.u, out.kappa, clf.value(x), rate, 0.0});

  const double h = cfg.h;
  for (long k = 0; k < steps; ++k) {
    try {
      const StateVector k1 = field(x, out);
      const StateVector x2 = x + 0.5 * h * k1;
      const StateVector k2 = field(x2, eval(x2));
      const StateVector x3 = x + 0.5 * h * k2;
      const StateVector k3 = field(x3, eval(x3));
      const StateVector x4 = x + h * k3;
      const StateVector k4 = field(x4, eval(x4));
      x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      if (!x.allFinite()) {
        std::ostringstream msg;
        msg << "state diverged at t = " << (static_cast<double>(k) + 1.0) * h;
        throw divergence_error(msg.str());
      }
      out = eval(x);
    } catch (const std::domain_error& e) {
      traj.truncated = true;
      traj.truncation_reason = e.what();
      break;
    }
    const double next_rate = cost_rate_of(out, cfg.m);
    const double cum =
        traj.samples.back().cost_cum + 0.5 * h * (rate + next_rate);
    rate = next_rate;
    traj.samples.push_back({(static_cast<double>(k) + 1.0) * h, x, out.u,
                            out.kappa, clf.value(x), rate, cum});
  }
  return traj;
}

DecreaseReport check_clf_decrease(const Trajectory& traj,
                                  const ControlAffineSystem& system,
                                  const Clf& clf) {
  DecreaseReport report;
  const auto& samples = traj.samples;
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    if (samples[k].x.norm() > 1e-6 && samples[k + 1].v >= samples[k].v) {
      report.violations.push_back({k, DecreaseViolation::Kind::ValueIncrease,
                                   samples[k + 1].v - samples[k].v});
    }
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (!samples[k].kappa.has_value()) {
      continue;
    }
    const ClfData data = lie_data(system, clf, samples[k].x);
    const double lhs = data.a + data.b.dot(samples[k].u);
    const double bound = -(*samples[k].kappa) * data.sigma_stg + 1e-8;
    if (lhs > bound) {
      report.violations.push_back(
          {k, DecreaseViolation::Kind::RateBound, lhs - bound});
    }
  }
  return report;
}

std::vector<RadialProbePoint> origin_continuity_probe(
    const ControlLaw& law, const ControlAffineSystem& system, const Clf& clf,
    const std::vector<double>& radii, int samples_per_radius,
    std::uint64_t seed) {
  UniformStateSampler sampler(system.state_dim, 1.0, seed);
  std::vector<RadialProbePoint> points;
  points.reserve(radii.size());
  for (double radius : radii) {
    double max_norm = 0.0;
    for (int i = 0; i < samples_per_radius; ++i) {
      StateVector direction(system.state_dim);
      double norm = 0.0;
      do {
        // Box-Muller pairs give a rotation-invariant direction
        for (int d = 0; d < system.state_dim; ++d) {
          const double u1 = std::max(sampler.uniform01(), 1e-300);
          const double u2 = sampler.uniform01();
          direction[d] = std::sqrt(-2.0 * std::log(u1)) *
                         std::cos(2.0 * std::numbers::pi * u2);
        }
        norm = direction.norm();
      } while (norm < 1e-12);
      const StateVector x = (radius / norm) * direction;
      const ControllerOutput out = law(lie_data(system, clf, x));
      max_norm = std::max(max_norm, out.u.norm());
    }
    points.push_back({radius, max_norm});
  }
  return points;
}

std::vector<SlopeProbePoint> smoothness_probe(
    const std::function<double(double)>& kappa_fn,
    const std::vector<double>& x_points, double fd_step) {
  if (fd_step <= 0.0) {
    throw std::domain_error("smoothness_probe: fd_step must be positive");
  }
  std::vector<SlopeProbePoint> result;
  result.reserve(x_points.size());
  for (double x : x_points) {
    SlopeProbePoint point;
    point.x = x;
    if (std::abs(x) <= fd_step) {
      point.skipped = true;  // the law has no classification at the origin
      result.push_back(point);
      continue;
    }
    const double center = kappa_fn(x);
    point.left_slope = (center - kappa_fn(x - fd_step)) / fd_step;
    point.right_slope = (kappa_fn(x + fd_step) - center) / fd_step;
    result.push_back(point);
  }
  return result;
}

}  // namespace uniclf
