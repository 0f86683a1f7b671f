#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "giry/generators.hpp"

namespace giry {

struct LawsConfig {
  std::uint64_t seed = 1;
  Index max_points = 4;
  int trials = 200;
  Index max_denominator = 16;

  /// Flattening used by the monad-law checks; empty means the library's mu.
  /// Exists so the suite can prove it rejects a wrong multiplication.
  std::function<Dist(const MetaDist&)> mu_impl;
};

struct LawCheck {
  std::string name;
  int cases = 0;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct LawsReport {
  std::uint64_t seed = 0;
  Index max_points = 0;
  int trials = 0;
  Index max_denominator = 0;
  std::vector<LawCheck> checks;

  bool all_passed() const;
};

/// Runs every law suite on randomized instances.  Exact checks throughout;
/// deterministic given the config (each check draws from its own stream, so
/// adding a check never reshuffles the others).
LawsReport run_laws(const LawsConfig& config);

std::string format_laws(const LawsReport& report);

}  // namespace giry
