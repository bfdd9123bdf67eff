#pragma once

#include <cstddef>
#include <vector>

namespace qmswap {

/// Largest velocity ratio v/c accepted; above it the classical-motion
/// treatment of the qubit is no longer meaningful.
inline constexpr double kMaxBeta = 1e-3;

/// Dimensionless parameters of one cavity + moving qubit. Time is measured in
/// units of the inverse cavity linewidth, so the linewidth itself never
/// appears.
struct ModelParams {
  double R = 0.1;         ///< vacuum Rabi frequency over linewidth
  double beta = 0.0;      ///< qubit velocity over the speed of light
  double omega = 1.5e9;   ///< qubit transition frequency over linewidth

  /// Throws RangeError naming the violated invariant.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Uniform grid of scaled times tau = lambda * t.
struct TimeGrid {
  double tau_start = 0.0;
  double tau_end = 50.0;
  std::size_t n_points = 1001;

  void validate() const;

  /// Sample points; the last one equals tau_end exactly.
  [[nodiscard]] std::vector<double> points() const;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

}  // namespace qmswap
