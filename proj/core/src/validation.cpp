#include "qmswap/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qmswap/amplitude.hpp"
#include "qmswap/entanglement.hpp"
#include "qmswap/entangling_power.hpp"
#include "qmswap/error.hpp"
#include "qmswap/scenario.hpp"

namespace qmswap {
namespace {

using Clock = std::chrono::steady_clock;
constexpr double kOmega = 1.5e9;

const std::vector<ModelParams>& preset_sets() {
  static const std::vector<ModelParams> sets = {
      {0.1, 0.0, kOmega},   {0.1, 2e-9, kOmega},  {0.1, 4e-9, kOmega},
      {10.0, 0.0, kOmega},  {10.0, 10e-9, kOmega}, {10.0, 15e-9, kOmega},
  };
  return sets;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

// Value of a single-column scan at one time.
double scan_at(ScenarioConfig config, double tau) {
  config.grid = TimeGrid{tau, tau, 1};
  return run_scan(config).row(0)[0];
}

CheckResult beta0_reduction() {
  const auto start = Clock::now();
  double worst = 0.0;
  const TimeGrid grid{0.0, 50.0, 1000};
  for (const double R : {0.1, 10.0}) {
    const AmplitudeModel model = build_amplitude_model({R, 0.0, kOmega});
    for (const double tau : grid.points()) {
      worst = std::max(worst, std::abs(amplitude(model, tau) - closed_form_beta0(R, tau)));
    }
  }
  const double elapsed = seconds_since(start);
  return {"AC1", "", worst < 1e-10 && elapsed < 1.0,
          "sup|analytic - closed form| = " + sci(worst) + " (< 1e-10, < 1 s)", elapsed};
}

CheckResult oracle_equivalence() {
  const auto start = Clock::now();
  double worst = 0.0;
  const TimeGrid grid{0.0, 50.0, 5001};
  for (const auto& params : preset_sets()) {
    const auto oracle = amplitude_ode_oracle(params, grid, 1e-3);
    const AmplitudeModel model = build_amplitude_model(params);
    const auto taus = grid.points();
    for (std::size_t i = 0; i < taus.size(); ++i) {
      worst = std::max(worst, std::abs(oracle[i] - amplitude(model, taus[i])));
    }
  }
  const double elapsed = seconds_since(start);
  return {"AC2", "", worst < 1e-6 && elapsed < 30.0,
          "sup|analytic - RK4 oracle| = " + sci(worst) + " over 6 figure parameter sets (< 1e-6, < 30 s)",
          elapsed};
}

CheckResult model_invariants() {
  const auto start = Clock::now();
  UniformSource source(20240601);
  double worst_sum = 0.0;
  double worst_slope = 0.0;
  double worst_vieta = 0.0;
  int degenerate = 0;
  for (int draw = 0; draw < 100; ++draw) {
    const ModelParams params{0.05 + 19.95 * source.next(), 2e-8 * source.next(),
                             1e8 + (1e10 - 1e8) * source.next()};
    const AmplitudeModel model = build_amplitude_model(params);
    if (model.degenerate()) {
      ++degenerate;
      continue;
    }
    worst_sum = std::max(worst_sum, model.normalization_residual());
    worst_slope = std::max(worst_slope, model.derivative_residual());
    const auto& q = model.roots();
    const CubicCoefficients c = cubic_coefficients(params);
    const auto rel = [](Complex got, Complex want) {
      return std::abs(got - want) / std::max(1.0, std::abs(want));
    };
    worst_vieta = std::max({worst_vieta, rel(q[0] + q[1] + q[2], -c.a2),
                            rel(q[0] * q[1] + q[0] * q[2] + q[1] * q[2], c.a1),
                            rel(q[0] * q[1] * q[2], -c.a0)});
  }
  const bool ok = worst_sum <= 1e-10 && worst_slope <= 1e-10 && worst_vieta <= 1e-10;
  return {"AC3", "", ok,
          "|sum A - 1| = " + sci(worst_sum) + ", |sum A q| = " + sci(worst_slope) +
              ", Vieta = " + sci(worst_vieta) + " (each <= 1e-10; " +
              std::to_string(degenerate) + " degenerate draws skipped)",
          seconds_since(start)};
}

CheckResult entropy() {
  const auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  std::uint64_t seed = 7;
  for (const double p : {0.1, 0.5, 0.9}) {
    const McEstimate mc = average_linear_entropy_mc(p, {1000000, seed++});
    const double exact = average_linear_entropy(Complex(std::sqrt(p), 0.0));
    const double z = std::abs(mc.mean - exact) / mc.std_error;
    ok = ok && z <= 3.0;
    detail << "p=" << p << ": " << z << " sigma; ";
  }
  // The S_av maximum sits exactly where |E|^2 crosses 1/2.
  double worst_peak = 0.0;
  std::size_t crossings = 0;
  const std::vector<std::pair<ModelParams, TimeGrid>> cases = {
      {{10.0, 0.0, kOmega}, {0.0, 50.0, 1001}},
      {{10.0, 15e-9, kOmega}, {0.0, 50.0, 1001}},
      {{0.1, 0.0, kOmega}, {0.0, 400.0, 1001}},
  };
  for (const auto& [params, grid] : cases) {
    const AmplitudeModel model = build_amplitude_model(params);
    double peak = 0.0;
    for (const double tau : grid.points()) {
      peak = std::max(peak, average_linear_entropy(amplitude(model, tau)));
    }
    const auto taus = population_crossings(model, grid, 0.5);
    for (const double tau : taus) {
      peak = std::max(peak, average_linear_entropy(amplitude(model, tau)));
    }
    if (!taus.empty()) {
      crossings += taus.size();
      worst_peak = std::max(worst_peak, std::abs(peak - 1.0 / 6.0));
    }
  }
  ok = ok && crossings > 0 && worst_peak <= 1e-9;
  detail << "max S_av at crossings: |max - 1/6| = " << sci(worst_peak) << " over " << crossings
         << " crossings";
  return {"AC4", "", ok, detail.str(), seconds_since(start)};
}

CheckResult concurrence_oracle() {
  const auto start = Clock::now();
  UniformSource source(99);
  double worst = 0.0;
  int evaluated = 0;
  for (int draw = 0; draw < 1000; ++draw) {
    const BlochAngles q1 = sample_haar(source);
    const BlochAngles q2 = sample_haar(source);
    const double tau = 50.0 * source.next();
    const auto& params = preset_sets()[static_cast<std::size_t>(draw) % preset_sets().size()];
    const Complex e = amplitude(build_amplitude_model(params), tau);
    const PostBsmState state = post_bsm_projection(q1, q2, e);
    if (state.norm < kZeroNorm) continue;
    worst = std::max(worst, std::abs(concurrence_closed(state) -
                                     concurrence_wootters(density_matrix(state))));
    ++evaluated;
  }
  return {"AC5", "", worst < 1e-8 && evaluated > 990,
          "max |closed - Wootters| = " + sci(worst) + " over " + std::to_string(evaluated) +
              " draws (< 1e-8)",
          seconds_since(start)};
}

CheckResult bell_conditions() {
  const auto start = Clock::now();
  double worst_bell = 0.0;
  double worst_zero = 0.0;
  std::size_t samples = 0;
  const std::vector<std::pair<double, double>> equal_states = {
      {0.0, 0.0}, {std::numbers::pi / 2, 0.0}, {1.0, 2.5}, {2.9, 4.0}};
  for (const auto& params : preset_sets()) {
    ScenarioConfig config;
    config.params = params;
    config.grid = {0.0, 50.0, 1001};
    const auto amps = amplitude_series(params, config.grid, AmplitudeMethod::Analytic, 1e-3);
    for (const auto& [theta, phi] : equal_states) {
      config.observable = Observable::Concurrence;
      config.qubit1 = BlochAngles(theta, phi);
      config.qubit2 = BlochAngles(theta, phi);
      const auto column = run_scan(config).column("concurrence");
      for (std::size_t i = 0; i < column.size(); ++i) {
        if (std::abs(amps[i]) <= 1e-12) continue;
        const double miss = std::abs(column[i] - 1.0);
        worst_bell = std::isnan(miss) ? std::numeric_limits<double>::infinity()
                                      : std::max(worst_bell, miss);
        ++samples;
      }
    }
    config.qubit1 = BlochAngles(std::numbers::pi, 0.7);
    config.qubit2 = BlochAngles(1.1, 0.3);
    for (const double v : run_scan(config).column("concurrence")) {
      worst_zero = std::isnan(v) ? std::numeric_limits<double>::infinity()
                                 : std::max(worst_zero, std::abs(v));
    }
  }
  return {"AC6", "", worst_bell <= 1e-10 && worst_zero == 0.0,
          "max |C - 1| on Bell-condition states = " + sci(worst_bell) + " (" +
              std::to_string(samples) + " samples, <= 1e-10); max C at theta1=pi = " +
              sci(worst_zero) + " (exactly 0)",
          seconds_since(start)};
}

CheckResult entangling_power() {
  const auto start = Clock::now();
  const QuadratureSpec quad;
  bool ok = true;
  std::ostringstream detail;
  for (const double p : {0.1, 0.5, 1.0}) {
    const double value = entangling_power_quadrature(p, quad);
    const McEstimate mc = entangling_power_mc(p, {1000000, 2024});
    const double z = std::abs(value - mc.mean) / mc.std_error;
    ok = ok && z <= 3.0;
    detail << "p=" << p << ": quad " << value << " vs MC " << mc.mean << " (" << z
           << " sigma); ";
  }
  double previous = -1.0;
  bool monotone = true;
  bool in_range = true;
  for (int i = 0; i <= 20; ++i) {
    const double value = entangling_power_quadrature(i / 20.0, quad);
    monotone = monotone && value >= previous;
    in_range = in_range && value >= 0.0 && value <= 1.0;
    previous = value;
  }
  const double at_zero = entangling_power_quadrature(0.0, quad);
  ok = ok && monotone && in_range && at_zero == 0.0;
  detail << "21-point grid " << (monotone ? "monotone" : "NOT monotone") << ", "
         << (in_range ? "within [0,1]" : "OUT of [0,1]") << ", E(0) = " << at_zero;
  return {"AC7", "", ok, detail.str(), seconds_since(start)};
}

CheckResult figure_trends() {
  const auto start = Clock::now();
  std::ostringstream detail;

  // (a) first S_av maximum = first p = 1/2 crossing, later for faster qubits.
  std::vector<double> first_peak;
  for (const double beta : {0.0, 2e-9, 4e-9}) {
    const auto taus =
        population_crossings(build_amplitude_model({0.1, beta, kOmega}), {0.0, 4000.0, 4001}, 0.5);
    first_peak.push_back(taus.empty() ? -1.0 : taus.front());
  }
  const bool a = first_peak[0] > 0.0 && first_peak[0] < first_peak[1] &&
                 first_peak[1] < first_peak[2];
  detail << "(a) first S_av peak tau = " << first_peak[0] << ", " << first_peak[1] << ", "
         << first_peak[2] << "; ";

  // (b) strong coupling at tau = 1.
  ScenarioConfig strong;
  strong.params = {10.0, 0.0, kOmega};
  strong.observable = Observable::EntropyAvg;
  ScenarioConfig strong_moving = strong;
  strong_moving.params.beta = 15e-9;
  const double sav_static = scan_at(strong, 1.0);
  const double sav_moving = scan_at(strong_moving, 1.0);
  strong.observable = Observable::Power;
  strong_moving.observable = Observable::Power;
  const double power_static = scan_at(strong, 1.0);
  const double power_moving = scan_at(strong_moving, 1.0);
  const bool b = sav_moving > sav_static && power_moving > power_static;
  detail << "(b) S_av " << sav_static << " -> " << sav_moving << ", power " << power_static
         << " -> " << power_moving << "; ";

  // (c) |gg> population of the fig6 state at tau = 1.
  const auto fig6 = figure_preset("fig6");
  const double gg_static = run_scan(fig6[0].config).column("pop_gg").front();
  const double gg_moving = run_scan(fig6[1].config).column("pop_gg").front();
  const bool c = gg_moving < gg_static;
  detail << "(c) pop_gg " << gg_static << " -> " << gg_moving << "; ";

  // (d) weak-coupling entangling power at tau = 10.
  std::vector<double> weak_power;
  for (const double beta : {0.0, 2e-9, 4e-9}) {
    ScenarioConfig weak;
    weak.params = {0.1, beta, kOmega};
    weak.observable = Observable::Power;
    weak_power.push_back(scan_at(weak, 10.0));
  }
  const bool d = weak_power[0] < weak_power[1] && weak_power[1] < weak_power[2];
  detail << "(d) power " << weak_power[0] << ", " << weak_power[1] << ", " << weak_power[2];

  const double elapsed = seconds_since(start);
  return {"AC8", "", a && b && c && d && elapsed < 60.0, detail.str(), elapsed};
}

CheckResult determinism() {
  const auto start = Clock::now();
  const auto render = [](const ScenarioConfig& config) {
    std::ostringstream out;
    write_csv(run_scan(config), out);
    return out.str();
  };
  std::size_t compared = 0;
  bool identical = true;
  for (const auto id : figure_ids()) {
    for (const auto& curve : figure_preset(id)) {
      identical = identical && render(curve.config) == render(curve.config);
      ++compared;
    }
  }
  ScenarioConfig mc;
  mc.params = {10.0, 15e-9, kOmega};
  mc.observable = Observable::Power;
  mc.power_method = PowerMethod::MonteCarlo;
  mc.mc = {20000, 77};
  mc.grid = {0.0, 2.0, 11};
  identical = identical && render(mc) == render(mc);
  ++compared;
  return {"AC9", "", identical,
          std::to_string(compared) + " CSV renders compared byte-for-byte across two runs",
          seconds_since(start)};
}

Check make(std::string id, std::string title, CheckResult (*fn)()) {
  return {id, title, [fn, id, title] {
            CheckResult r = fn();
            r.id = id;
            r.title = title;
            return r;
          }};
}

}  // namespace

std::vector<Check> acceptance_checks() {
  return {
      make("AC1", "beta=0 exact reduction", beta0_reduction),
      make("AC2", "analytic vs ODE oracle on figure parameter sets", oracle_equivalence),
      make("AC3", "amplitude model invariants", model_invariants),
      make("AC4", "linear entropy Haar average and peak", entropy),
      make("AC5", "closed-form vs Wootters concurrence", concurrence_oracle),
      make("AC6", "Bell and zero-concurrence conditions", bell_conditions),
      make("AC7", "entangling power estimators", entangling_power),
      make("AC8", "qualitative figure trends", figure_trends),
      make("AC9", "determinism of figure output", determinism),
  };
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks) {
  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    const auto start = Clock::now();
    try {
      results.push_back(check.run());
    } catch (const std::exception& e) {
      results.push_back({check.id, check.title, false,
                         std::string("exception: ") + e.what(), seconds_since(start)});
    }
  }
  return results;
}

}  // namespace qmswap
