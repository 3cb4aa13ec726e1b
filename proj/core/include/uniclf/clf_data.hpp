#pragma once

#include <cmath>

#include "uniclf/system.hpp"

namespace uniclf {

/// Per-state CLF data: a = L_f V, b = L_g V, plus the derived scalars
/// every control formula consumes.
struct ClfData {
  StateVector x;
  double a = 0.0;
  GradientRow b;
  double b_norm_sq = 0.0;
  double sigma_stg = 0.0;  // sqrt(a^2 + ||b||^4)

  bool b_is_zero() const {
    return b_norm_sq <= kZeroNormThreshold * kZeroNormThreshold;
  }
  double b_norm() const { return std::sqrt(b_norm_sq); }
};

/// Admissible range for the scaling term kappa. Undefined when b(x) = 0.
struct KappaInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool defined = false;

  bool contains(double kappa, double tol = 1e-9) const {
    return defined && kappa >= lo - tol && kappa <= hi + tol;
  }
};

/// sqrt(a^2 + b_norm_sq^2); zero exactly when a = 0 and b = 0.
double sigma_sontag(double a, double b_norm_sq);

/// Evaluates the Lie-derivative bundle at x. Throws config_error on
/// dimension mismatches between x, the system evaluators, and the CLF.
ClfData lie_data(const ControlAffineSystem& system, const Clf& clf,
                 const StateVector& x);

/// Builds a ClfData directly from (a, b); the derived fields are filled in.
ClfData make_clf_data(double a, GradientRow b, StateVector x = {});

/// True iff gamma * ||b|| >= a, the compatibility test for the input bound
/// ||u|| <= gamma. Throws std::domain_error unless gamma > 0.
bool check_compatibility(const ClfData& data, double gamma);

KappaInterval kappa_interval(const ClfData& data);

/// On a genuine CLF b(x) = 0 forces a(x) < 0; false flags an invalid
/// candidate at this state.
bool valid_clf_point(const ClfData& data);

}  // namespace uniclf
