#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qmswap/sampling.hpp"
#include "qmswap/time_series.hpp"

namespace qmswap {

struct QuadratureSpec {
  std::size_t nodes_per_axis = 16;  ///< Gauss-Legendre order per panel
  double tolerance = 1e-9;          ///< relative, between successive doublings

  void validate() const;

  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

inline constexpr std::size_t kMinQuadratureNodes = 16;
inline constexpr double kMinQuadratureTolerance = 1e-10;

/// Concurrence of the swapped state averaged analytically over the relative
/// phase phi1 - phi2, as a function of the two polar angles and p = |E|^2.
[[nodiscard]] double reduced_integrand(double theta1, double theta2, double population);

/// Haar average of the swapped concurrence at population p, by a 2-D
/// Gauss-Legendre rule refined by node doubling until two successive values
/// agree. Throws NumericError(NotConverged) otherwise.
[[nodiscard]] double entangling_power_quadrature(double population, const QuadratureSpec& spec);

/// The same average by sampling both initial states from the Haar measure.
/// Bitwise reproducible for a fixed seed.
[[nodiscard]] McEstimate entangling_power_mc(double population, const MonteCarloSpec& spec);

/// Cubic spline of the quadrature value on a uniform grid in u = p^(1/3).
class EntanglingPowerTable {
 public:
  /// Builds the table and checks it at every cell midpoint against direct
  /// quadrature; returns nullopt if any midpoint misses by `max_error` or
  /// more.
  static std::optional<EntanglingPowerTable> build(const QuadratureSpec& spec,
                                                   std::size_t nodes = 129,
                                                   double max_error = 1e-6);

  [[nodiscard]] double operator()(double population) const;
  [[nodiscard]] double validation_error() const noexcept { return validation_error_; }
  [[nodiscard]] std::size_t nodes() const noexcept { return nodes_; }

 private:
  struct Spline;

  std::shared_ptr<const Spline> spline_;
  std::size_t nodes_ = 0;
  double validation_error_ = 0.0;
};

enum class PowerMethod { Quadrature, MonteCarlo };

struct PowerSettings {
  PowerMethod method = PowerMethod::Quadrature;
  QuadratureSpec quadrature;
  MonteCarloSpec monte_carlo;
};

/// Entangling power along a trajectory. Depends on tau only through
/// p = |E(tau)|^2. Monte Carlo reuses the same seed at every sample
/// (common random numbers). Columns: `power`, plus `power_stderr` for Monte Carlo.
[[nodiscard]] TimeSeries entangling_power_series(std::span<const double> taus,
                                                 std::span<const std::complex<double>> amplitudes,
                                                 const PowerSettings& settings);

}  // namespace qmswap
