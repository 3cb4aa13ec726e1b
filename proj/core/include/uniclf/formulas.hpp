#pragma once

#include <optional>

#include "uniclf/clf_data.hpp"

namespace uniclf {

/// Which piece of a control law produced the output.
enum class Branch {
  Interior,       // formula active, input strictly inside the unit ball
  Boundary,       // input on the unit-ball boundary
  ZeroB,          // b(x) = 0 short-circuit
  PmnActive,      // min-norm constraint active
  PmnZero,        // min-norm constraint slack, u = 0
  SontagNonzero,  // Sontag branch with b(x) != 0
  SontagZero,     // Sontag branch with b(x) = 0
};

const char* to_string(Branch branch);

struct ControllerOutput {
  ControlVector u;
  std::optional<double> kappa;  // absent for laws without a scaling term
  Branch branch = Branch::ZeroB;
  bool feasible = true;
};

/// Scaling-term choices for the unified controller.
///
/// KappaOne is -2a/sigma clamped into the admissible interval; KappaTwo and
/// KappaThree are the companion closed forms; Constant holds a fixed value;
/// OptBased evaluates the optimization-based formula with cost weight m.
struct ScalingStrategy {
  enum class Kind { LinSontag, KappaOne, KappaTwo, KappaThree, Constant, OptBased };

  Kind kind = Kind::LinSontag;
  double param = 0.0;  // Constant: the value; OptBased: the cost weight m

  static ScalingStrategy lin_sontag() { return {Kind::LinSontag, 0.0}; }
  static ScalingStrategy kappa_one() { return {Kind::KappaOne, 0.0}; }
  static ScalingStrategy kappa_two() { return {Kind::KappaTwo, 0.0}; }
  static ScalingStrategy kappa_three() { return {Kind::KappaThree, 0.0}; }
  static ScalingStrategy constant(double c);   // requires c >= 0
  static ScalingStrategy opt_based(double m);  // requires m > 0
};

/// Weight matrix and running cost certifying inverse optimality of a
/// unified-controller output via the Hamilton-Jacobi-Bellman identity.
struct InverseOptimalData {
  double gamma_weight = 0.0;      // gamma(x) >= 0
  std::optional<double> r_scale;  // R = r_scale * I; empty marks the
                                  // unconstrained-weight case gamma = 0
  double l_value = 0.0;
  double hjb_residual = 0.0;
};

/// Min-norm input for the tightened condition (a + sigma) + b u <= 0.
ControllerOutput pmn(const ClfData& data, double sigma);

/// Sontag's formula; identical to pmn(data, sigma_stg).
ControllerOutput sontag(const ClfData& data);

/// Lin-Sontag's input-bounded formula. Incompatible states are returned
/// with feasible = false rather than raising.
ControllerOutput lin_sontag(const ClfData& data);

/// The scaling term that turns the unified controller into Lin-Sontag's
/// formula. Throws std::domain_error when b(x) = 0.
double kappa_lin_sontag(const ClfData& data);

/// Evaluates a scaling strategy at this state. Throws std::domain_error
/// when b(x) = 0 or the resulting kappa leaves the admissible interval.
double kappa_strategy(const ClfData& data, const ScalingStrategy& strategy);

/// The unified controller u = -((a + kappa sigma)/||b||^2) b^T.
/// Throws std::domain_error when b != 0 and kappa is outside K(x).
ControllerOutput unified(const ClfData& data, double kappa);

/// Closed-form solution of the joint input/scaling optimization with cost
/// weight m. Throws std::domain_error when m < sqrt(1 + ||b||^2) at this
/// state; incompatible states come back flagged infeasible.
ControllerOutput opt_universal(const ClfData& data, double m);

/// Inverse-optimality data for the unified controller at (data, kappa).
InverseOptimalData inverse_optimal_data(const ClfData& data, double kappa);

/// Smallest admissible cost weight at this state: sqrt(1 + ||b||^2).
double min_opt_weight(const ClfData& data);

}  // namespace uniclf
