#include "uniclf/system.hpp"

#include <cmath>

namespace uniclf {

namespace {

double cube(double v) { return v * v * v; }

}  // namespace

ControlAffineSystem system_from_catalogue(const std::string& id) {
  if (id == "paper_sec5") {
    ControlAffineSystem sys;
    sys.state_dim = 2;
    sys.input_dim = 2;
    sys.drift = [](const StateVector& x) {
      StateVector f(2);
      f << -cube(x[0]), -x[1];
      return f;
    };
    sys.input_map = [](const StateVector& x) {
      InputMatrix g(2, 2);
      g << std::exp(x[1]), 0.0,
           0.0, 1.0;
      return g;
    };
    return sys;
  }
  if (id == "scalar_sec4") {
    ControlAffineSystem sys;
    sys.state_dim = 1;
    sys.input_dim = 1;
    sys.drift = [](const StateVector&) { return StateVector::Zero(1); };
    sys.input_map = [](const StateVector&) {
      return InputMatrix::Identity(1, 1);
    };
    return sys;
  }
  throw config_error("unknown system id: " + id);
}

Clf clf_from_catalogue(const std::string& id) {
  if (id == "paper_sec5") {
    Clf clf;
    clf.value = [](const StateVector& x) {
      return 0.5 * (x[0] * x[0] + x[1] * x[1]);
    };
    clf.gradient = [](const StateVector& x) {
      GradientRow g(2);
      g << x[0], x[1];
      return g;
    };
    return clf;
  }
  if (id == "scalar_sec4") {
    Clf clf;
    clf.value = [](const StateVector& x) { return 0.5 * x[0] * x[0]; };
    clf.gradient = [](const StateVector& x) {
      GradientRow g(1);
      g << x[0];
      return g;
    };
    return clf;
  }
  throw config_error("unknown CLF id: " + id);
}

std::vector<std::string> catalogue_ids() { return {"paper_sec5", "scalar_sec4"}; }

}  // namespace uniclf
