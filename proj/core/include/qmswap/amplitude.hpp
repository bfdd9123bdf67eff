#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "qmswap/model_params.hpp"

namespace qmswap {

using Complex = std::complex<double>;

/// Coefficients of the monic cubic q^3 + a2 q^2 + a1 q + a0 whose roots are
/// the decay rates of the survival amplitude.
struct CubicCoefficients {
  Complex a2;
  Complex a1;
  Complex a0;
};

/// The two memory-kernel rates y+- = 1 +- beta (1 + i Omega).
struct KernelRates {
  Complex plus;
  Complex minus;
};

[[nodiscard]] KernelRates kernel_rates(const ModelParams& params);

[[nodiscard]] CubicCoefficients cubic_coefficients(const ModelParams& params);

/// All three roots, ordered by ascending real part and then ascending
/// imaginary part. Each root is Newton-polished after the companion-matrix
/// eigensolve.
[[nodiscard]] std::array<Complex, 3> solve_cubic(const CubicCoefficients& c);

/// Relative threshold on the smallest pairwise root distance below which the
/// partial-fraction form is considered ill-posed.
inline constexpr double kDegeneracyGap = 1e-6;

/// E(tau) = sum_i A_i exp(q_i tau) for a non-degenerate root set.
class AmplitudeModel {
 public:
  [[nodiscard]] const std::array<Complex, 3>& roots() const noexcept { return roots_; }
  [[nodiscard]] const std::array<Complex, 3>& weights() const noexcept { return weights_; }
  [[nodiscard]] bool degenerate() const noexcept { return degenerate_; }
  [[nodiscard]] const ModelParams& params() const noexcept { return params_; }

  /// |sum A_i - 1| and |sum A_i q_i|; both vanish for an exact model.
  [[nodiscard]] double normalization_residual() const noexcept;
  [[nodiscard]] double derivative_residual() const noexcept;

 private:
  friend AmplitudeModel build_amplitude_model(const ModelParams& params);

  ModelParams params_;
  std::array<Complex, 3> roots_{};
  std::array<Complex, 3> weights_{};
  bool degenerate_ = false;
};

/// Builds the three-exponential model. Degenerate root sets are flagged, not
/// rejected; such models must be evaluated with the ODE oracle.
[[nodiscard]] AmplitudeModel build_amplitude_model(const ModelParams& params);

/// Throws NumericError(DegenerateModel) when `model.degenerate()`.
[[nodiscard]] Complex amplitude(const AmplitudeModel& model, double tau);

/// Integrates dE/dtau = -(R^2/4)(z+ + z-), dz+-/dtau = E - y+- z+- with
/// classical RK4 from tau = 0 and samples E at the grid points. Each grid
/// interval is split into ceil(dtau / step) equal substeps.
[[nodiscard]] std::vector<Complex> amplitude_ode_oracle(const ModelParams& params,
                                                        const TimeGrid& grid, double step);

/// Stability guard: step * max|y+-| may not exceed this.
inline constexpr double kMaxOracleStepRate = 0.1;

/// Static-qubit amplitude e^{-tau/2}[cosh(D tau/2) + sinh(D tau/2)/D] with
/// D = sqrt(1 - 2R^2); at D = 0 the confluent limit e^{-tau/2}(1 + tau/2).
[[nodiscard]] Complex closed_form_beta0(double R, double tau);

enum class AmplitudeMethod { Analytic, Oracle };

/// E on every grid point. Analytic falls back to the oracle when the model is
/// degenerate.
[[nodiscard]] std::vector<Complex> amplitude_series(const ModelParams& params,
                                                    const TimeGrid& grid,
                                                    AmplitudeMethod method, double ode_step);

/// Times within the grid span where |E|^2 crosses `level`, located by
/// bisection between bracketing samples of `grid`.
[[nodiscard]] std::vector<double> population_crossings(const AmplitudeModel& model,
                                                       const TimeGrid& grid, double level);

}  // namespace qmswap
