#include "qmswap/scenario.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qmswap/error.hpp"

namespace qmswap {
namespace {

constexpr std::array<std::string_view, 19> kKeys = {
    "R",           "beta",     "omega-ratio", "observable", "tau-min",    "tau-max", "tau-steps",
    "theta1",      "phi1",     "theta2",      "phi2",       "method",     "power-method",
    "mc-samples",  "seed",     "quad-nodes",  "quad-tol",   "ode-step",   "out"};

constexpr std::array<std::string_view, 9> kFigureIds = {
    "fig2a", "fig2b", "fig3a", "fig3b", "fig5", "fig6", "fig7", "fig8a", "fig8b"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const Setting& s) {
  double value = 0.0;
  const char* begin = s.value.data();
  const char* end = begin + s.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || s.value.empty()) {
    throw ParseError(s.origin + ": '" + s.key + "' expects a number, got '" + s.value + "'");
  }
  return value;
}

std::uint64_t parse_unsigned(const Setting& s) {
  std::uint64_t value = 0;
  const char* begin = s.value.data();
  const char* end = begin + s.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || s.value.empty()) {
    throw ParseError(s.origin + ": '" + s.key + "' expects a non-negative integer, got '" +
                     s.value + "'");
  }
  return value;
}

Observable parse_observable(const Setting& s) {
  for (const auto o : {Observable::Amplitude, Observable::Entropy, Observable::EntropyAvg,
                       Observable::Concurrence, Observable::Power, Observable::Density}) {
    if (s.value == to_string(o)) return o;
  }
  throw ParseError(s.origin + ": unknown observable '" + s.value + "'");
}

// Rows where the projection has vanishing success probability.
constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

std::string describe(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "scenario (observable=" << to_string(c.observable) << ", R=" << c.params.R
      << ", beta=" << c.params.beta << ", omega-ratio=" << c.params.omega << ")";
  return out.str();
}

std::string short_number(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

std::string_view to_string(Observable o) noexcept {
  switch (o) {
    case Observable::Amplitude:
      return "amplitude";
    case Observable::Entropy:
      return "entropy";
    case Observable::EntropyAvg:
      return "entropy-avg";
    case Observable::Concurrence:
      return "concurrence";
    case Observable::Power:
      return "power";
    case Observable::Density:
      return "density";
  }
  return "unknown";
}

std::string_view to_string(AmplitudeMethod m) noexcept {
  return m == AmplitudeMethod::Analytic ? "analytic" : "oracle";
}

std::string_view to_string(PowerMethod m) noexcept {
  return m == PowerMethod::Quadrature ? "quad" : "mc";
}

void ScenarioConfig::validate() const {
  params.validate();
  grid.validate();
  mc.validate();
  quad.validate();
  if (!(ode_step > 0.0) || !std::isfinite(ode_step)) throw RangeError("ode-step must be > 0");
  const bool needs_pair =
      observable == Observable::Concurrence || observable == Observable::Density;
  if (needs_pair && (!qubit1 || !qubit2)) {
    throw RangeError("observable '" + std::string(to_string(observable)) +
                     "' requires initial angles theta1 and theta2");
  }
}

std::vector<Setting> parse_config_text(std::string_view text) {
  std::vector<Setting> settings;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string origin = "line " + std::to_string(line_no);
    if (eq == std::string_view::npos) {
      throw ParseError(origin + ": expected 'key = value', got '" + std::string(line) + "'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(origin + ": missing key");
    settings.push_back({std::string(key), std::string(value), origin});
  }
  return settings;
}

ScenarioConfig build_config(std::span<const Setting> settings) {
  ScenarioConfig c;
  std::optional<double> theta1, phi1, theta2, phi2;
  std::optional<std::uint64_t> steps;
  for (const Setting& s : settings) {
    const std::string& k = s.key;
    if (k == "R") {
      c.params.R = parse_double(s);
    } else if (k == "beta") {
      c.params.beta = parse_double(s);
    } else if (k == "omega-ratio") {
      c.params.omega = parse_double(s);
    } else if (k == "observable") {
      c.observable = parse_observable(s);
    } else if (k == "tau-min") {
      c.grid.tau_start = parse_double(s);
    } else if (k == "tau-max") {
      c.grid.tau_end = parse_double(s);
    } else if (k == "tau-steps") {
      steps = parse_unsigned(s);
    } else if (k == "theta1") {
      theta1 = parse_double(s);
    } else if (k == "phi1") {
      phi1 = parse_double(s);
    } else if (k == "theta2") {
      theta2 = parse_double(s);
    } else if (k == "phi2") {
      phi2 = parse_double(s);
    } else if (k == "method") {
      if (s.value == "analytic") {
        c.method = AmplitudeMethod::Analytic;
      } else if (s.value == "oracle") {
        c.method = AmplitudeMethod::Oracle;
      } else {
        throw ParseError(s.origin + ": method must be 'analytic' or 'oracle'");
      }
    } else if (k == "power-method") {
      if (s.value == "quad") {
        c.power_method = PowerMethod::Quadrature;
      } else if (s.value == "mc") {
        c.power_method = PowerMethod::MonteCarlo;
      } else {
        throw ParseError(s.origin + ": power-method must be 'quad' or 'mc'");
      }
    } else if (k == "mc-samples") {
      c.mc.n_samples = parse_unsigned(s);
    } else if (k == "seed") {
      c.mc.seed = parse_unsigned(s);
    } else if (k == "quad-nodes") {
      c.quad.nodes_per_axis = parse_unsigned(s);
    } else if (k == "quad-tol") {
      c.quad.tolerance = parse_double(s);
    } else if (k == "ode-step") {
      c.ode_step = parse_double(s);
    } else if (k == "out") {
      c.out = s.value;
    } else {
      throw ParseError(s.origin + ": unknown key '" + k + "'");
    }
  }
  if (steps) c.grid.n_points = static_cast<std::size_t>(*steps) + 1;
  if (theta1 || phi1) c.qubit1 = BlochAngles(theta1.value_or(0.0), phi1.value_or(0.0));
  if (theta2 || phi2) c.qubit2 = BlochAngles(theta2.value_or(0.0), phi2.value_or(0.0));
  c.validate();
  return c;
}

ScenarioConfig parse_config(std::string_view file_text, std::span<const Setting> flag_overrides) {
  std::vector<Setting> all = parse_config_text(file_text);
  all.insert(all.end(), flag_overrides.begin(), flag_overrides.end());
  return build_config(all);
}

std::string to_config_text(const ScenarioConfig& c) {
  std::string text;
  const auto put = [&](std::string_view key, const std::string& value) {
    text.append(key).append(" = ").append(value).append("\n");
  };
  put("R", format_double(c.params.R));
  put("beta", format_double(c.params.beta));
  put("omega-ratio", format_double(c.params.omega));
  put("observable", std::string(to_string(c.observable)));
  put("tau-min", format_double(c.grid.tau_start));
  put("tau-max", format_double(c.grid.tau_end));
  put("tau-steps", std::to_string(c.grid.n_points - 1));
  if (c.qubit1) {
    put("theta1", format_double(c.qubit1->theta()));
    put("phi1", format_double(c.qubit1->phi()));
  }
  if (c.qubit2) {
    put("theta2", format_double(c.qubit2->theta()));
    put("phi2", format_double(c.qubit2->phi()));
  }
  put("method", std::string(to_string(c.method)));
  put("power-method", std::string(to_string(c.power_method)));
  put("mc-samples", std::to_string(c.mc.n_samples));
  put("seed", std::to_string(c.mc.seed));
  put("quad-nodes", std::to_string(c.quad.nodes_per_axis));
  put("quad-tol", format_double(c.quad.tolerance));
  put("ode-step", format_double(c.ode_step));
  if (!c.out.empty()) put("out", c.out);
  return text;
}

std::span<const std::string_view> config_keys() { return kKeys; }

TimeSeries run_scan(const ScenarioConfig& config) {
  config.validate();
  try {
    const std::vector<double> taus = config.grid.points();
    const std::vector<Complex> amps =
        amplitude_series(config.params, config.grid, config.method, config.ode_step);

    switch (config.observable) {
      case Observable::Amplitude: {
        TimeSeries series({"amplitude_re", "amplitude_im", "population"});
        for (std::size_t i = 0; i < taus.size(); ++i) {
          const double row[] = {amps[i].real(), amps[i].imag(), std::norm(amps[i])};
          series.add_row(taus[i], row);
        }
        return series;
      }
      case Observable::Entropy: {
        const double theta = config.qubit1 ? config.qubit1->theta() : 0.0;
        TimeSeries series({"entropy"});
        for (std::size_t i = 0; i < taus.size(); ++i) {
          const double row[] = {linear_entropy(theta, amps[i])};
          series.add_row(taus[i], row);
        }
        return series;
      }
      case Observable::EntropyAvg: {
        TimeSeries series({"entropy_avg"});
        for (std::size_t i = 0; i < taus.size(); ++i) {
          const double row[] = {average_linear_entropy(amps[i])};
          series.add_row(taus[i], row);
        }
        return series;
      }
      case Observable::Concurrence: {
        TimeSeries series({"concurrence"});
        for (std::size_t i = 0; i < taus.size(); ++i) {
          const PostBsmState state = post_bsm_projection(*config.qubit1, *config.qubit2, amps[i]);
          const double row[] = {state.norm < kZeroNorm ? kUndefined : concurrence_closed(state)};
          series.add_row(taus[i], row);
        }
        return series;
      }
      case Observable::Power: {
        PowerSettings settings{config.power_method, config.quad, config.mc};
        return entangling_power_series(taus, amps, settings);
      }
      case Observable::Density: {
        TimeSeries series({"pop_ee", "pop_eg", "pop_ge", "pop_gg"});
        for (std::size_t i = 0; i < taus.size(); ++i) {
          const PostBsmState state = post_bsm_projection(*config.qubit1, *config.qubit2, amps[i]);
          if (state.norm < kZeroNorm) {
            const double row[] = {kUndefined, kUndefined, kUndefined, kUndefined};
            series.add_row(taus[i], row);
          } else {
            series.add_row(taus[i], density_matrix(state).populations());
          }
        }
        return series;
      }
    }
    throw RangeError("unhandled observable");
  } catch (const NumericError& e) {
    throw NumericError(e.kind(), describe(config) + ": " + e.detail());
  }
}

std::span<const std::string_view> figure_ids() { return kFigureIds; }

std::vector<FigureCurve> figure_preset(std::string_view id) {
  constexpr double kOmega = 1.5e9;
  constexpr double kPi = std::numbers::pi;
  // Weak coupling decays on scales of 1e2..1e4; see README for the horizon.
  const TimeGrid weak_grid{0.0, 4000.0, 2001};
  const TimeGrid strong_grid{0.0, 50.0, 1001};

  const auto curve = [&](std::string label, double R, double beta, Observable obs,
                         const TimeGrid& grid) {
    ScenarioConfig c;
    c.params = {R, beta, kOmega};
    c.grid = grid;
    c.observable = obs;
    c.out = std::string(id) + "_" + label + ".csv";
    return FigureCurve{std::move(label), std::move(c)};
  };
  const auto beta_sweep = [&](double R, std::initializer_list<double> betas, Observable obs,
                              const TimeGrid& grid) {
    std::vector<FigureCurve> curves;
    for (const double beta : betas) {
      curves.push_back(curve("beta_" + short_number(beta), R, beta, obs, grid));
    }
    return curves;
  };
  const auto initial_states = [&](double R, const TimeGrid& grid) {
    const std::array<std::array<double, 4>, 3> angles = {{
        {kPi / 2, 0.0, kPi / 4, 0.0},
        {kPi / 2, 0.0, 0.0, 0.0},
        {kPi / 2, kPi, kPi / 4, 0.0},
    }};
    std::vector<FigureCurve> curves;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      FigureCurve fc =
          curve("state_" + std::to_string(i + 1), R, 2e-9, Observable::Concurrence, grid);
      fc.config.qubit1 = BlochAngles(angles[i][0], angles[i][1]);
      fc.config.qubit2 = BlochAngles(angles[i][2], angles[i][3]);
      curves.push_back(std::move(fc));
    }
    return curves;
  };

  if (id == "fig2a") {
    auto curves = beta_sweep(0.1, {0.0, 2e-9, 4e-9}, Observable::Entropy, weak_grid);
    for (auto& c : curves) c.config.qubit1 = BlochAngles(0.0, 0.0);
    return curves;
  }
  if (id == "fig2b") return beta_sweep(0.1, {0.0, 2e-9, 4e-9}, Observable::EntropyAvg, weak_grid);
  if (id == "fig3a") {
    auto curves = beta_sweep(10.0, {0.0, 10e-9, 15e-9}, Observable::Entropy, strong_grid);
    for (auto& c : curves) c.config.qubit1 = BlochAngles(0.0, 0.0);
    return curves;
  }
  if (id == "fig3b") {
    return beta_sweep(10.0, {0.0, 10e-9, 15e-9}, Observable::EntropyAvg, strong_grid);
  }
  if (id == "fig5") return beta_sweep(10.0, {0.0, 10e-9, 15e-9}, Observable::Power, strong_grid);
  if (id == "fig6") {
    auto curves = beta_sweep(10.0, {0.0, 15e-9}, Observable::Density, TimeGrid{1.0, 1.0, 1});
    for (auto& c : curves) {
      c.config.qubit1 = BlochAngles(0.0, 0.0);       // |e>
      c.config.qubit2 = BlochAngles(kPi / 2, 0.0);   // (|e> + |g>)/sqrt(2)
    }
    return curves;
  }
  if (id == "fig7") return beta_sweep(0.1, {0.0, 2e-9, 4e-9}, Observable::Power, weak_grid);
  if (id == "fig8a") return initial_states(10.0, strong_grid);
  if (id == "fig8b") return initial_states(0.1, weak_grid);
  throw RangeError("unknown figure '" + std::string(id) + "' (known: fig2a fig2b fig3a fig3b "
                   "fig5 fig6 fig7 fig8a fig8b)");
}

}  // namespace qmswap
