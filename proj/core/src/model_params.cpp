#include "qmswap/model_params.hpp"

#include <cmath>
#include <string>

#include "qmswap/error.hpp"

namespace qmswap {

void ModelParams::validate() const {
  if (!std::isfinite(R) || R <= 0.0) {
    throw RangeError("R must be > 0 (got " + std::to_string(R) + ")");
  }
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw RangeError("omega-ratio must be > 0 (got " + std::to_string(omega) + ")");
  }
  if (!std::isfinite(beta) || beta < 0.0) {
    throw RangeError("beta must be >= 0 (got " + std::to_string(beta) + ")");
  }
  if (beta >= kMaxBeta) {
    throw RangeError("beta must be < 1e-3 for classical qubit motion (got " +
                     std::to_string(beta) + ")");
  }
}

void TimeGrid::validate() const {
  if (!std::isfinite(tau_start) || !std::isfinite(tau_end) || tau_start < 0.0 ||
      tau_end < 0.0) {
    throw RangeError("tau range must be finite and >= 0");
  }
  if (tau_start > tau_end) {
    throw RangeError("tau-min must not exceed tau-max");
  }
  if (n_points == 0) {
    throw RangeError("time grid needs at least one point");
  }
  if (n_points == 1 && tau_start != tau_end) {
    throw RangeError("a time grid over a nonzero span needs at least 2 points");
  }
  if (n_points >= 2 && tau_start == tau_end) {
    throw RangeError("a time grid with several points needs tau-max > tau-min");
  }
}

std::vector<double> TimeGrid::points() const {
  std::vector<double> taus(n_points);
  if (n_points == 1) {
    taus[0] = tau_start;
    return taus;
  }
  const double span = tau_end - tau_start;
  const auto intervals = static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    taus[i] = tau_start + span * (static_cast<double>(i) / intervals);
  }
  taus.back() = tau_end;
  return taus;
}

}  // namespace qmswap
