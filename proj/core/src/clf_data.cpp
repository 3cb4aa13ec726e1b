#include "uniclf/clf_data.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "uniclf/log.hpp"

namespace uniclf {

double sigma_sontag(double a, double b_norm_sq) {
  // hypot keeps sigma >= max(|a|, b_norm_sq) exactly at the extremes
  return std::hypot(a, b_norm_sq);
}

ClfData lie_data(const ControlAffineSystem& system, const Clf& clf,
                 const StateVector& x) {
  if (x.size() != system.state_dim) {
    throw config_error("lie_data: state has length " +
                       std::to_string(x.size()) + ", system expects " +
                       std::to_string(system.state_dim));
  }
  const StateVector f = system.drift(x);
  const InputMatrix g = system.input_map(x);
  const GradientRow grad = clf.gradient(x);
  if (f.size() != system.state_dim || grad.size() != system.state_dim ||
      g.rows() != system.state_dim || g.cols() != system.input_dim) {
    throw config_error("lie_data: evaluator output dimensions disagree with "
                       "the declared system dimensions");
  }

  ClfData data;
  data.x = x;
  data.a = grad.dot(f);
  data.b = grad * g;
  data.b_norm_sq = data.b.squaredNorm();
  data.sigma_stg = sigma_sontag(data.a, data.b_norm_sq);
  if (!valid_clf_point(data)) {
    log_debug("lie_data: invalid-CLF point, b = 0 with a = " +
              std::to_string(data.a));
  }
  return data;
}

ClfData make_clf_data(double a, GradientRow b, StateVector x) {
  ClfData data;
  data.x = std::move(x);
  data.a = a;
  data.b = std::move(b);
  data.b_norm_sq = data.b.squaredNorm();
  data.sigma_stg = sigma_sontag(data.a, data.b_norm_sq);
  return data;
}

bool check_compatibility(const ClfData& data, double gamma) {
  if (gamma <= 0.0) {
    throw std::domain_error("check_compatibility: gamma must be positive");
  }
  return gamma * data.b_norm() >= data.a;
}

KappaInterval kappa_interval(const ClfData& data) {
  KappaInterval interval;
  if (data.b_is_zero()) {
    return interval;  // defined = false
  }
  // sigma >= ||b||^2 > 0 here, so the ratios are well posed
  interval.defined = true;
  interval.lo = std::max(-data.a / data.sigma_stg, 0.0);
  interval.hi = (data.b_norm() - data.a) / data.sigma_stg;
  return interval;
}

bool valid_clf_point(const ClfData& data) {
  return !data.b_is_zero() || data.a < 0.0 ||
         (data.a == 0.0 && data.x.size() > 0 && data.x.norm() == 0.0);
}

}  // namespace uniclf
