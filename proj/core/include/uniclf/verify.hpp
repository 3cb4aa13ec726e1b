#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uniclf {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Property sweeps over seeded random compatible states of the built-in
// two-state system in [-2, 2]^2. States where an operation's own
// precondition fails (e.g. the cost-weight bound for the optimization-based
// law) are rejected by the sampler and redrawn.
std::vector<CheckResult> verify_oracle(std::uint64_t seed, long samples);
std::vector<CheckResult> verify_invariants(std::uint64_t seed, long samples);
std::vector<CheckResult> verify_margin(std::uint64_t seed, long samples);
std::vector<CheckResult> verify_continuity(std::uint64_t seed, long samples);

}  // namespace uniclf
