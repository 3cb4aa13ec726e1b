#pragma once

#include <Eigen/Core>

#include <stdexcept>

namespace uniclf {

using StateVector = Eigen::VectorXd;
using ControlVector = Eigen::VectorXd;
using GradientRow = Eigen::RowVectorXd;
using InputMatrix = Eigen::MatrixXd;  // n x m, columns multiply the inputs

// Below this 2-norm a coefficient vector counts as zero when a formula
// branches on b(x) = 0.
inline constexpr double kZeroNormThreshold = 1e-12;

/// An inconsistent system/scenario description: dimension mismatch,
/// unknown catalogue id, malformed config file.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the oracle solvers when the constraint set is empty.
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the simulator when the state stops being finite.
class divergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uniclf
