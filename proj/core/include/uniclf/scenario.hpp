#pragma once

#include <string>
#include <vector>

#include "uniclf/simulation.hpp"

namespace uniclf {

struct ControllerSpec {
  std::string name;
  LawKind law = LawKind::Sontag;
  ScalingStrategy strategy;
  double xi = 0.0;
};

/// A simulation scenario as loaded from a JSON config file.
struct ScenarioConfig {
  std::string system_id;
  std::string clf_id;
  StateVector x0;
  double t_end = 0.0;
  double h = 0.0;
  double m = 10.0;
  double gamma = 1.0;  // input-bound scale, used by the compatibility check
  std::vector<ControllerSpec> controllers;
};

/// Parses and validates a scenario file. Throws config_error on any
/// problem: unreadable file, bad JSON, unknown ids, inconsistent
/// dimensions, empty controller list, duplicate controller names.
ScenarioConfig load_scenario(const std::string& path);

struct RunSummary {
  double max_input_norm = 0.0;
  double final_state_norm = 0.0;
  double total_cost = 0.0;
  long clf_violations = 0;
  long bound_violations = 0;  // samples with ||u|| > 1 + 1e-9
};

RunSummary summarize(const Trajectory& traj, const ControlAffineSystem& system,
                     const Clf& clf);

/// Writes one trajectory as CSV with columns
/// t, x1..xn, u1..um, kappa, V, cost_rate, cost_cum
/// at 17 significant digits; an absent kappa becomes an empty field.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// Runs every controller of the scenario and writes <name>.csv per
/// controller plus summary.json under out_dir.
/// Exit codes: 0 success, 2 config problem, 3 divergence.
int cmd_simulate(const std::string& config_path, const std::string& out_dir);

/// Runs a named verification suite (oracle | invariants | margin |
/// continuity | all) with a seeded state sampler; prints one pass/fail
/// line per check. Exit codes: 0 all pass, 1 failures, 2 unknown suite.
int cmd_verify(const std::string& suite, std::uint64_t seed, long samples);

}  // namespace uniclf
