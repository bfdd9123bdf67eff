#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmswap/amplitude.hpp"
#include "qmswap/entanglement.hpp"
#include "qmswap/entangling_power.hpp"
#include "qmswap/model_params.hpp"
#include "qmswap/time_series.hpp"

namespace qmswap {

enum class Observable { Amplitude, Entropy, EntropyAvg, Concurrence, Power, Density };

[[nodiscard]] std::string_view to_string(Observable o) noexcept;
[[nodiscard]] std::string_view to_string(AmplitudeMethod m) noexcept;
[[nodiscard]] std::string_view to_string(PowerMethod m) noexcept;

/// One scan: model, grid, observable and the numerical knobs behind it.
struct ScenarioConfig {
  ModelParams params;
  TimeGrid grid;
  Observable observable = Observable::EntropyAvg;
  std::optional<BlochAngles> qubit1;
  std::optional<BlochAngles> qubit2;
  AmplitudeMethod method = AmplitudeMethod::Analytic;
  PowerMethod power_method = PowerMethod::Quadrature;
  MonteCarloSpec mc;
  QuadratureSpec quad;
  double ode_step = 1e-3;
  std::string out;

  /// Range checks plus observable-specific requirements.
  void validate() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// A `key = value` pair together with where it came from ("line 3",
/// "flag --R"), used in error messages.
struct Setting {
  std::string key;
  std::string value;
  std::string origin;
};

/// Flat `key = value` text; `#` starts a comment. Throws ParseError with the
/// line number on malformed lines.
[[nodiscard]] std::vector<Setting> parse_config_text(std::string_view text);

/// Applies settings in order over the defaults, so later entries win. Unknown
/// keys and unparsable numbers throw ParseError; invariant violations throw
/// RangeError.
[[nodiscard]] ScenarioConfig build_config(std::span<const Setting> settings);

/// File settings first, then flag overrides.
[[nodiscard]] ScenarioConfig parse_config(std::string_view file_text,
                                          std::span<const Setting> flag_overrides);

/// Inverse of parse_config: every key, doubles at 17 significant digits.
[[nodiscard]] std::string to_config_text(const ScenarioConfig& config);

/// Every recognised key, in canonical order.
[[nodiscard]] std::span<const std::string_view> config_keys();

/// Evaluates the configured observable on the grid. Numeric failures are
/// rethrown with the scenario attached.
[[nodiscard]] TimeSeries run_scan(const ScenarioConfig& config);

/// One curve of a figure preset; `config.out` is a bare file name.
struct FigureCurve {
  std::string label;
  ScenarioConfig config;
};

[[nodiscard]] std::span<const std::string_view> figure_ids();

/// Parameter sets behind each figure curve. Throws RangeError for an unknown
/// id.
[[nodiscard]] std::vector<FigureCurve> figure_preset(std::string_view id);

}  // namespace qmswap
