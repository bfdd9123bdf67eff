#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qmswap {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// A named end-to-end check of the invariants and oracle agreements.
struct Check {
  std::string id;
  std::string title;
  std::function<CheckResult()> run;
};

/// The acceptance suite, AC1..AC9, in order. Each check carries its own
/// tolerances and runtime budget.
[[nodiscard]] std::vector<Check> acceptance_checks();

/// Runs every check; exceptions are reported as failures, not propagated.
[[nodiscard]] std::vector<CheckResult> run_checks(const std::vector<Check>& checks);

/// Golden Haar average of the swapped concurrence at p = 1, from an
/// independent 4-angle Monte Carlo (1e7 samples), with its standard error.
inline constexpr double kGoldenPowerAtFullPopulation = 0.4455777997862895;
inline constexpr double kGoldenPowerStdError = 8.841680190183175e-05;

}  // namespace qmswap
