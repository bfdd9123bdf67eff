#include "qmswap/entangling_power.hpp"

#include <algorithm>
#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qmswap/entanglement.hpp"
#include "qmswap/error.hpp"
#include "qmswap/gauss_legendre.hpp"

namespace qmswap {
namespace {

constexpr double kPi = std::numbers::pi;

// Panels are graded geometrically toward the places where the integrand
// varies on the scale sqrt(p): theta1 -> 0 and theta1 -> pi for the outer
// variable, the ridge theta2 = theta1 for the inner one.
constexpr double kGradingRatio = 0.2;
constexpr double kResolveFraction = 0.05;
constexpr int kMaxGradingLevels = 40;
constexpr int kMaxDoublings = 3;
constexpr double kAbsoluteFloor = 1e-14;

void check_population(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw RangeError("population must lie in [0, 1] (got " + std::to_string(p) + ")");
  }
}

// Levels needed before the panel touching the feature is narrower than
// kResolveFraction * scale.
int grading_levels(double width, double scale) {
  if (!(scale > 0.0) || !(width > 0.0)) return kMaxGradingLevels;
  const double target = kResolveFraction * scale;
  if (target >= width) return 1;
  const int levels =
      static_cast<int>(std::ceil(std::log(target / width) / std::log(kGradingRatio)));
  return std::clamp(levels, 1, kMaxGradingLevels);
}

// Integral over [a, a + width] on panels graded toward `a`.
template <typename F>
double graded_from_left(const GaussLegendreRule& rule, F&& f, double a, double width,
                        int levels) {
  double lo = a;
  double hi = a + width * std::pow(kGradingRatio, levels);
  double sum = rule.integrate(f, lo, hi);
  for (int level = levels - 1; level >= 0; --level) {
    lo = hi;
    hi = a + width * std::pow(kGradingRatio, level);
    sum += rule.integrate(f, lo, hi);
  }
  return sum;
}

// 2 * int_0^pi dtheta1 int_0^theta1 du (sin theta1 sin theta2 / 4) f, with
// theta2 = theta1 - u; the factor 2 restores the theta2 > theta1 half.
double folded_integral(double p, const GaussLegendreRule& rule) {
  const double ridge_scale = std::sqrt(2.0 * p);
  const auto outer = [&](double theta1) {
    const double sin1 = std::sin(theta1);
    const double c1 = half_cos(theta1);
    const auto inner = [&](double u) {
      const double theta2 = theta1 - u;
      return 0.25 * sin1 * std::sin(theta2) * reduced_integrand(theta1, theta2, p);
    };
    return graded_from_left(rule, inner, 0.0, theta1,
                            grading_levels(theta1, ridge_scale * c1 * c1));
  };
  const auto mirrored = [&](double t) { return outer(kPi - t); };
  const double half = 0.5 * kPi;
  const int levels = grading_levels(half, ridge_scale);
  return 2.0 * (graded_from_left(rule, outer, 0.0, half, levels) +
                graded_from_left(rule, mirrored, 0.0, half, levels));
}

}  // namespace

void QuadratureSpec::validate() const {
  if (nodes_per_axis < kMinQuadratureNodes) {
    throw RangeError("quad-nodes must be >= 16 (got " + std::to_string(nodes_per_axis) + ")");
  }
  if (!(tolerance >= kMinQuadratureTolerance) || !std::isfinite(tolerance)) {
    throw RangeError("quad-tol must be >= 1e-10");
  }
}

void MonteCarloSpec::validate() const {
  if (n_samples < kMinMonteCarloSamples) {
    throw RangeError("mc-samples must be >= 10000 (got " + std::to_string(n_samples) + ")");
  }
}

double reduced_integrand(double theta1, double theta2, double population) {
  const double c1 = half_cos(theta1);
  const double c2 = half_cos(theta2);
  const double a = 2.0 * population * c1 * c1 * c2 * c2;
  // B -+ C = A + sin^2((theta1 -+ theta2)/2), free of cancellation.
  const double half_diff = std::sin(0.5 * (theta1 - theta2));
  const double half_sum = std::sin(0.5 * (theta1 + theta2));
  const double b_minus_c = a + half_diff * half_diff;
  const double b_plus_c = a + half_sum * half_sum;
  // A > 0 bounds both factors below by A, so only A = 0 needs a limit.
  if (!(a > 0.0)) return 0.0;
  return std::min(1.0, a / (std::sqrt(b_minus_c) * std::sqrt(b_plus_c)));
}

double entangling_power_quadrature(double population, const QuadratureSpec& spec) {
  spec.validate();
  check_population(population);
  if (population == 0.0) return 0.0;

  std::size_t n = spec.nodes_per_axis;
  double previous = folded_integral(population, GaussLegendreRule(n));
  double change = 0.0;
  for (int doubling = 0; doubling < kMaxDoublings; ++doubling) {
    n *= 2;
    const double current = folded_integral(population, GaussLegendreRule(n));
    change = std::abs(current - previous);
    if (change <= std::max(spec.tolerance * std::abs(current), kAbsoluteFloor)) {
      return std::clamp(current, 0.0, 1.0);
    }
    previous = current;
  }
  std::ostringstream msg;
  msg << "entangling power at p=" << population << " changed by " << change << " at " << n
      << " nodes per panel";
  throw NumericError(NumericErrorKind::NotConverged, msg.str());
}

McEstimate entangling_power_mc(double population, const MonteCarloSpec& spec) {
  spec.validate();
  check_population(population);
  const std::complex<double> amplitude(std::sqrt(population), 0.0);
  UniformSource source(spec.seed);
  RunningMean acc;
  for (std::uint64_t i = 0; i < spec.n_samples; ++i) {
    const BlochAngles q1 = sample_haar(source);
    const BlochAngles q2 = sample_haar(source);
    const PostBsmState state = post_bsm_projection(q1, q2, amplitude);
    acc.add(state.norm < kZeroNorm ? 0.0 : concurrence_closed(state));
  }
  return acc.estimate();
}

struct EntanglingPowerTable::Spline {
  boost::math::interpolators::cardinal_cubic_b_spline<double> curve;
};

std::optional<EntanglingPowerTable> EntanglingPowerTable::build(const QuadratureSpec& spec,
                                                                std::size_t nodes,
                                                                double max_error) {
  if (nodes < 5) throw RangeError("interpolation table needs at least 5 nodes");
  const double h = 1.0 / static_cast<double>(nodes - 1);
  const auto population_at = [](double u) { return std::min(1.0, u * u * u); };
  std::vector<double> values(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    values[i] = entangling_power_quadrature(population_at(static_cast<double>(i) * h), spec);
  }
  // The default end slopes come from the first few nodes and are far too
  // coarse near u = 1; feed second-order one-sided slopes on a fine step.
  const double d = 1e-4;
  const auto quad_u = [&](double u) { return entangling_power_quadrature(population_at(u), spec); };
  const double left_slope = (-3.0 * values.front() + 4.0 * quad_u(d) - quad_u(2.0 * d)) / (2.0 * d);
  const double right_slope =
      (3.0 * values.back() - 4.0 * quad_u(1.0 - d) + quad_u(1.0 - 2.0 * d)) / (2.0 * d);
  EntanglingPowerTable table;
  table.spline_ = std::make_shared<const Spline>(
      Spline{boost::math::interpolators::cardinal_cubic_b_spline<double>(
          values.begin(), values.end(), 0.0, h, left_slope, right_slope)});
  table.nodes_ = nodes;
  for (std::size_t i = 0; i + 1 < nodes; ++i) {
    const double u = (static_cast<double>(i) + 0.5) * h;
    const double p = population_at(u);
    const double error = std::abs(table(p) - entangling_power_quadrature(p, spec));
    table.validation_error_ = std::max(table.validation_error_, error);
  }
  if (!(table.validation_error_ < max_error)) return std::nullopt;
  return table;
}

double EntanglingPowerTable::operator()(double population) const {
  check_population(population);
  return std::clamp(spline_->curve(std::cbrt(population)), 0.0, 1.0);
}

TimeSeries entangling_power_series(std::span<const double> taus,
                                   std::span<const std::complex<double>> amplitudes,
                                   const PowerSettings& settings) {
  if (taus.size() != amplitudes.size()) {
    throw RangeError("entangling power series: tau/amplitude length mismatch");
  }
  std::vector<double> populations;
  populations.reserve(amplitudes.size());
  for (const auto& e : amplitudes) {
    const double p = std::norm(e);
    if (!(p <= 1.0 + 2e-9)) throw RangeError("|E|^2 exceeds 1 along the trajectory");
    populations.push_back(std::min(p, 1.0));
  }

  if (settings.method == PowerMethod::MonteCarlo) {
    TimeSeries series({"power", "power_stderr"});
    for (std::size_t i = 0; i < taus.size(); ++i) {
      const McEstimate est = entangling_power_mc(populations[i], settings.monte_carlo);
      const double row[] = {est.mean, est.std_error};
      series.add_row(taus[i], row);
    }
    return series;
  }

  // The table costs about 2 * nodes quadratures; only worth it for long grids.
  constexpr std::size_t kTableNodes = 129;
  std::optional<EntanglingPowerTable> table;
  if (populations.size() > 2 * kTableNodes) {
    table = EntanglingPowerTable::build(settings.quadrature, kTableNodes);
  }
  TimeSeries series({"power"});
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const double p = populations[i];
    const double value[] = {table ? (*table)(p) : entangling_power_quadrature(p, settings.quadrature)};
    series.add_row(taus[i], value);
  }
  return series;
}

}  // namespace qmswap
