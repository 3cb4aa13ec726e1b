#include "uniclf/qp_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uniclf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGoldenWidthTol = 1e-8;
constexpr double kBallActiveTol = 1e-7;

// Minimal-norm point of the half-space {u : row u <= -offset}.
ControlVector project_origin_halfspace(const GradientRow& row, double offset) {
  if (offset <= 0.0) {
    return ControlVector::Zero(row.size());
  }
  return -(offset / row.squaredNorm()) * row.transpose();
}

struct InnerSolve {
  double cost = kInf;  // +inf when the ball misses the tightened half-space
  double unorm_sq = 0.0;
  bool feasible = false;
};

// Exact inner minimization over u for a fixed kappa.
InnerSolve inner_solve(const ClfData& data, double m, double kappa) {
  InnerSolve r;
  const double penalty = 0.5 * m * (1.0 - kappa) * (1.0 - kappa);
  const double viol = data.a + kappa * data.sigma_stg;
  if (viol <= 0.0) {
    r.cost = penalty;
    r.unorm_sq = 0.0;
    r.feasible = true;
    return r;
  }
  const double dist_sq = viol * viol / data.b_norm_sq;
  if (dist_sq > 1.0 + 1e-14) {
    return r;  // infeasible kappa
  }
  r.cost = 0.5 * dist_sq + penalty;
  r.unorm_sq = dist_sq;
  r.feasible = true;
  return r;
}

ControlVector inner_input(const ClfData& data, double kappa) {
  return project_origin_halfspace(data.b, data.a + kappa * data.sigma_stg);
}

}  // namespace

const char* to_string(ActiveSet active_set) {
  switch (active_set) {
    case ActiveSet::None: return "none";
    case ActiveSet::ClfOnly: return "clf_only";
    case ActiveSet::ClfAndBall: return "clf_and_ball";
  }
  return "unknown";
}

double joint_objective(const ControlVector& u, double kappa, double m) {
  return 0.5 * (u.squaredNorm() + m * (1.0 - kappa) * (1.0 - kappa));
}

ControlVector solve_pmn(const ClfData& data, double sigma) {
  if (data.b_is_zero()) {
    if (data.a + sigma > 0.0) {
      throw infeasible_error("solve_pmn: b = 0 and a + sigma > 0, no input "
                             "can satisfy the constraint");
    }
    return ControlVector::Zero(data.b.size());
  }
  return project_origin_halfspace(data.b, data.a + sigma);
}

JointQpSolution solve_joint(const ClfData& data, double m) {
  if (m <= 0.0) {
    throw std::domain_error("solve_joint: m must be positive");
  }
  if (!check_compatibility(data, 1.0)) {
    throw infeasible_error("solve_joint: state is incompatible with the "
                           "unit input bound");
  }

  JointQpSolution sol;
  sol.u = ControlVector::Zero(data.b.size());
  if (data.b_is_zero()) {
    // u = 0, kappa = 1 is feasible (a <= 0 here) and costless
    sol.kappa = 1.0;
    sol.objective = 0.0;
    sol.converged = true;
    sol.active_set = ActiveSet::None;
    return sol;
  }

  const double s = data.sigma_stg;
  const double bn = data.b_norm();
  const double lo = std::max(-data.a / s, 0.0);
  const double hi = (bn - data.a) / s;

  auto cost = [&](double kappa) { return inner_solve(data, m, kappa).cost; };

  // Golden section over the 10%-extended interval; the extension lets the
  // sweep detect (not assume) that the optimum falls inside [lo, hi].
  const double margin = 0.1 * (hi - lo) + 1e-12;
  double left = lo - margin;
  double right = hi + margin;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = right - invphi * (right - left);
  double x2 = left + invphi * (right - left);
  double f1 = cost(x1);
  double f2 = cost(x2);
  int iterations = 0;
  while (right - left > kGoldenWidthTol && iterations < 400) {
    if (f1 <= f2) {  // ties shrink leftward, where the minimum must be
      right = x2;
      x2 = x1;
      f2 = f1;
      x1 = right - invphi * (right - left);
      f1 = cost(x1);
    } else {
      left = x1;
      x1 = x2;
      f1 = f2;
      x2 = left + invphi * (right - left);
      f2 = cost(x2);
    }
    ++iterations;
  }
  sol.converged = right - left <= kGoldenWidthTol;

  // Polish: the profile cost(kappa) is convex with derivative
  // viol * s / ||b||^2 + m (kappa - 1) on the active part, so a sign
  // bisection pins the stationary point to machine precision. This keeps
  // multiplier residuals tight even when ||b|| is tiny.
  auto slope = [&](double kappa) {
    const double viol = data.a + kappa * s;
    const double active = viol > 0.0 ? viol * s / data.b_norm_sq : 0.0;
    return active + m * (kappa - 1.0);
  };
  double kappa = std::clamp(0.5 * (left + right), lo, hi);
  if (slope(hi) <= 0.0) {
    kappa = hi;  // cost still decreasing at the feasibility edge
  } else {
    double a_k = lo;
    double b_k = hi;
    for (int i = 0; i < 200 && b_k - a_k > 1e-16 * std::max(1.0, b_k); ++i) {
      const double mid = 0.5 * (a_k + b_k);
      (slope(mid) < 0.0 ? a_k : b_k) = mid;
    }
    kappa = 0.5 * (a_k + b_k);
  }

  // Keep whichever candidate evaluates best.
  for (double candidate : {std::clamp(0.5 * (left + right), lo, hi), lo, hi}) {
    if (cost(candidate) < cost(kappa)) {
      kappa = candidate;
    }
  }

  sol.kappa = kappa;
  sol.u = inner_input(data, kappa);
  sol.objective = joint_objective(sol.u, kappa, m);
  sol.lambda1 = std::max(m * (1.0 - kappa) / s, 0.0);
  if (sol.u.norm() >= 1.0 - kBallActiveTol) {
    sol.active_set = ActiveSet::ClfAndBall;
    sol.lambda2 = std::max(0.5 * (sol.lambda1 * bn - 1.0), 0.0);
  } else {
    sol.active_set = ActiveSet::ClfOnly;
    sol.lambda2 = 0.0;
  }
  return sol;
}

JointQpSolution brute_force_grid(const ClfData& data, double m,
                                 double grid_step) {
  const int dim = static_cast<int>(data.b.size());
  if (dim > 2) {
    throw std::invalid_argument(
        "brute_force_grid supports input dimension <= 2");
  }
  if (grid_step <= 0.0) {
    throw std::domain_error("brute_force_grid: grid_step must be positive");
  }

  const double s = data.sigma_stg;
  const double kappa_cap =
      data.b_is_zero() ? 2.0 : (data.b_norm() - data.a) / s + 1.0;
  const long n_side = std::lround(1.0 / grid_step);
  const long j_one = std::lround(1.0 / grid_step);

  // Best grid kappa for a fixed u: the feasible grid point closest to 1.
  auto best_kappa = [&](double constraint_value) -> double {
    double cap = kappa_cap;
    if (s > 0.0) {
      cap = std::min(cap, -constraint_value / s);
    } else if (constraint_value > 0.0) {
      return -1.0;  // constraint unsatisfiable for this u
    }
    if (cap < 0.0) {
      return -1.0;
    }
    const long j_max = static_cast<long>(std::floor(cap / grid_step + 1e-12));
    const long j = std::min(j_max, j_one);
    return static_cast<double>(j) * grid_step;
  };

  JointQpSolution best;
  best.objective = kInf;
  ControlVector u(dim);
  for (long i = -n_side; i <= n_side; ++i) {
    u[0] = static_cast<double>(i) * grid_step;
    const long inner_span = dim == 2 ? n_side : 0;
    for (long j = -inner_span; j <= inner_span; ++j) {
      if (dim == 2) {
        u[1] = static_cast<double>(j) * grid_step;
      }
      if (u.squaredNorm() > 1.0 + 1e-12) {
        continue;
      }
      const double kappa = best_kappa(data.a + data.b.dot(u));
      if (kappa < 0.0) {
        continue;
      }
      const double objective = joint_objective(u, kappa, m);
      if (objective < best.objective) {
        best.objective = objective;
        best.u = u;
        best.kappa = kappa;
      }
    }
  }

  best.converged = std::isfinite(best.objective);
  if (best.converged) {
    if (data.b_is_zero()) {
      best.active_set = ActiveSet::None;
    } else if (best.u.norm() >= 1.0 - 3.0 * grid_step) {
      best.active_set = ActiveSet::ClfAndBall;
    } else {
      best.active_set = ActiveSet::ClfOnly;
    }
    // grid-resolution multiplier estimates from the kappa stationarity
    best.lambda1 = s > 0.0 ? std::max(m * (1.0 - best.kappa) / s, 0.0) : 0.0;
    best.lambda2 = best.active_set == ActiveSet::ClfAndBall
                       ? std::max(0.5 * (best.lambda1 * data.b_norm() - 1.0), 0.0)
                       : 0.0;
  }
  return best;
}

}  // namespace uniclf
