#include "uniclf/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "uniclf/log.hpp"

namespace uniclf {

namespace {

constexpr double kKappaTol = 1e-9;
constexpr double kRegionTieTol = 1e-12;  // ties route to the boundary region

ControlVector zero_input(const ClfData& data) {
  return ControlVector::Zero(data.b.size());
}

Branch ball_branch(const ControlVector& u) {
  return std::abs(u.norm() - 1.0) <= kKappaTol ? Branch::Boundary
                                               : Branch::Interior;
}

[[noreturn]] void throw_kappa_outside(const ClfData& data, double kappa,
                                      const KappaInterval& interval) {
  std::ostringstream msg;
  msg << "kappa = " << kappa << " outside admissible interval ["
      << interval.lo << ", " << interval.hi << "] (a = " << data.a
      << ", ||b|| = " << data.b_norm() << ")";
  throw std::domain_error(msg.str());
}

}  // namespace

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::Interior: return "interior";
    case Branch::Boundary: return "boundary";
    case Branch::ZeroB: return "zero_b";
    case Branch::PmnActive: return "pmn_active";
    case Branch::PmnZero: return "pmn_zero";
    case Branch::SontagNonzero: return "sontag_nonzero";
    case Branch::SontagZero: return "sontag_zero";
  }
  return "unknown";
}

ScalingStrategy ScalingStrategy::constant(double c) {
  if (c < 0.0) {
    throw std::domain_error("constant scaling term must be nonnegative");
  }
  return {Kind::Constant, c};
}

ScalingStrategy ScalingStrategy::opt_based(double m) {
  if (m <= 0.0) {
    throw std::domain_error("cost weight m must be positive");
  }
  return {Kind::OptBased, m};
}

double min_opt_weight(const ClfData& data) {
  return std::sqrt(1.0 + data.b_norm_sq);
}

ControllerOutput pmn(const ClfData& data, double sigma) {
  ControllerOutput out;
  if (!data.b_is_zero() && data.a + sigma >= 0.0) {
    out.u = -((data.a + sigma) / data.b_norm_sq) * data.b.transpose();
    out.branch = Branch::PmnActive;
    out.feasible = true;
  } else {
    out.u = zero_input(data);
    out.branch = Branch::PmnZero;
    // u = 0 satisfies the constraint unless b = 0 left it unsatisfiable
    out.feasible = !data.b_is_zero() || data.a + sigma <= 0.0;
  }
  return out;
}

ControllerOutput sontag(const ClfData& data) {
  ControllerOutput out = pmn(data, data.sigma_stg);
  out.branch = data.b_is_zero() ? Branch::SontagZero : Branch::SontagNonzero;
  return out;
}

double kappa_lin_sontag(const ClfData& data) {
  if (data.b_is_zero()) {
    throw std::domain_error("kappa_lin_sontag requires b(x) != 0");
  }
  const double root = std::sqrt(1.0 + data.b_norm_sq);
  return (data.sigma_stg - data.a * root) / (data.sigma_stg * (1.0 + root));
}

ControllerOutput lin_sontag(const ClfData& data) {
  ControllerOutput out;
  out.feasible = check_compatibility(data, 1.0);
  if (data.b_is_zero()) {
    out.u = zero_input(data);
    out.kappa = 1.0;  // continuous limit of the scaling term as b -> 0
    out.branch = Branch::ZeroB;
    return out;
  }
  const double root = std::sqrt(1.0 + data.b_norm_sq);
  const double scale =
      (data.a + data.sigma_stg) / (data.b_norm_sq * (1.0 + root));
  out.u = -scale * data.b.transpose();
  out.kappa = kappa_lin_sontag(data);
  out.branch = ball_branch(out.u);
  return out;
}

double kappa_strategy(const ClfData& data, const ScalingStrategy& strategy) {
  if (data.b_is_zero()) {
    throw std::domain_error("kappa_strategy requires b(x) != 0");
  }
  const KappaInterval interval = kappa_interval(data);
  if (interval.hi < interval.lo) {
    throw std::domain_error(
        "kappa_strategy: admissible interval is empty (incompatible state)");
  }

  double kappa = 0.0;
  switch (strategy.kind) {
    case ScalingStrategy::Kind::LinSontag:
      kappa = kappa_lin_sontag(data);
      break;
    case ScalingStrategy::Kind::KappaOne: {
      const double raw = -2.0 * data.a / data.sigma_stg;
      kappa = std::clamp(raw, interval.lo, interval.hi);
      if (kappa != raw) {
        log_debug("kappa_strategy: kappa_1 clamped from " +
                  std::to_string(raw) + " to " + std::to_string(kappa));
      }
      break;
    }
    case ScalingStrategy::Kind::KappaTwo: {
      const double root = std::sqrt(1.0 + data.b_norm_sq);
      const double s = data.sigma_stg;
      kappa = (data.b_norm_sq * root - data.a * s) /
              (s * s + data.b_norm_sq * (1.0 + root));
      break;
    }
    case ScalingStrategy::Kind::KappaThree:
      kappa = 0.5 * (kappa_strategy(data, ScalingStrategy::kappa_one()) +
                     kappa_strategy(data, ScalingStrategy::kappa_two()));
      break;
    case ScalingStrategy::Kind::Constant:
      kappa = strategy.param;
      break;
    case ScalingStrategy::Kind::OptBased:
      kappa = opt_universal(data, strategy.param).kappa.value();
      break;
  }

  if (!interval.contains(kappa, kKappaTol)) {
    throw_kappa_outside(data, kappa, interval);
  }
  return kappa;
}

ControllerOutput unified(const ClfData& data, double kappa) {
  ControllerOutput out;
  if (data.b_is_zero()) {
    out.u = zero_input(data);
    out.kappa = 1.0;
    out.branch = Branch::ZeroB;
    out.feasible = data.a <= 0.0;
    return out;
  }
  const KappaInterval interval = kappa_interval(data);
  if (!interval.contains(kappa, kKappaTol)) {
    throw_kappa_outside(data, kappa, interval);
  }
  out.u = -((data.a + kappa * data.sigma_stg) / data.b_norm_sq) *
          data.b.transpose();
  out.kappa = kappa;
  out.branch = ball_branch(out.u);
  out.feasible = true;
  return out;
}

ControllerOutput opt_universal(const ClfData& data, double m) {
  const double m_min = min_opt_weight(data);
  if (m < m_min - 1e-12) {
    std::ostringstream msg;
    msg << "opt_universal: cost weight m = " << m
        << " below the per-state bound sqrt(1 + ||b||^2) = " << m_min;
    throw std::domain_error(msg.str());
  }
  ControllerOutput out;
  out.feasible = check_compatibility(data, 1.0);
  if (data.b_is_zero()) {
    out.u = zero_input(data);
    out.kappa = 1.0;  // the joint optimizer's value when b = 0
    out.branch = Branch::ZeroB;
    return out;
  }
  const double s = data.sigma_stg;
  const double bn = data.b_norm();
  const double bns = data.b_norm_sq;
  const double region =
      m * bns + s * s - m * data.a * bn - m * s * bn;
  if (region > kRegionTieTol) {
    // ball constraint inactive
    const double denom = s * s + m * bns;
    out.u = -(m * (data.a + s) / denom) * data.b.transpose();
    out.kappa = 1.0 - (data.a + s) * s / denom;
    out.branch = Branch::Interior;
  } else {
    // both constraints active: unit-norm input
    out.u = -data.b.transpose() / bn;
    out.kappa = (bn - data.a) / s;
    out.branch = Branch::Boundary;
  }
  return out;
}

InverseOptimalData inverse_optimal_data(const ClfData& data, double kappa) {
  InverseOptimalData result;
  if (data.b_is_zero()) {
    result.gamma_weight = 0.0;
    result.r_scale.reset();
    result.l_value = -data.a;
    result.hjb_residual = result.l_value + data.a;
    return result;
  }
  const KappaInterval interval = kappa_interval(data);
  if (!interval.contains(kappa, kKappaTol)) {
    throw_kappa_outside(data, kappa, interval);
  }
  const double gamma =
      std::max((data.a + kappa * data.sigma_stg) / data.b_norm_sq, 0.0);
  result.gamma_weight = gamma;
  if (gamma > 0.0) {
    result.r_scale = 1.0 / (2.0 * gamma);
  }
  // quad = b R^{-1} b^T / 4 with R^{-1} = 2 gamma I; kept out of r_scale so
  // the gamma = 0 case never multiplies an infinity
  const double quad = 0.5 * gamma * data.b_norm_sq;
  result.l_value = -data.a + quad;
  result.hjb_residual = result.l_value + data.a - quad;
  return result;
}

}  // namespace uniclf
