#pragma once

#include "uniclf/clf_data.hpp"

namespace uniclf {

enum class ActiveSet { None, ClfOnly, ClfAndBall };

const char* to_string(ActiveSet active_set);

struct JointQpSolution {
  ControlVector u;
  double kappa = 1.0;
  double objective = 0.0;
  double lambda1 = 0.0;  // multiplier of the tightened CLF constraint
  double lambda2 = 0.0;  // multiplier of the unit-ball constraint
  bool converged = false;
  ActiveSet active_set = ActiveSet::None;
};

/// Objective of the joint problem: (||u||^2 + m (1 - kappa)^2) / 2.
double joint_objective(const ControlVector& u, double kappa, double m);

/// Min-norm u with (a + sigma) + b u <= 0, via projection of the origin
/// onto the half-space. Throws infeasible_error when b = 0 and a + sigma > 0.
///
/// This is a numeric certificate for the closed-form law and shares no code
/// with the formulas module.
ControlVector solve_pmn(const ClfData& data, double sigma);

/// Numeric solution of min (||u||^2 + m(1-kappa)^2)/2 subject to the
/// tightened CLF condition and ||u|| <= 1.
///
/// Outer 1-D search over kappa (golden section on a 10%-extended interval,
/// then a derivative-sign bisection polish inside [lo, hi]); the inner
/// min-norm-u subproblem is solved exactly per kappa. Multipliers are
/// recovered from the active constraints. Throws infeasible_error at
/// incompatible states, std::domain_error for m <= 0.
JointQpSolution solve_joint(const ClfData& data, double m);

/// Exhaustive grid search over u in the unit ball and kappa in
/// [0, K.hi + 1]; a coarse second oracle. Supports input dimension <= 2.
JointQpSolution brute_force_grid(const ClfData& data, double m, double grid_step);

}  // namespace uniclf
