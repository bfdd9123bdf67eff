#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "qmswap/error.hpp"
#include "qmswap/scenario.hpp"
#include "qmswap/validation.hpp"

namespace qmswap::cli {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_scan_command(const std::string& config_path,
                     const std::map<std::string, std::optional<std::string>>& flags,
                     std::ostream& out) {
  std::vector<Setting> overrides;
  for (const auto& [key, value] : flags) {
    if (value) overrides.push_back({key, *value, "flag --" + key});
  }
  const std::string file_text = config_path.empty() ? std::string{} : read_file(config_path);
  const ScenarioConfig config = parse_config(file_text, overrides);
  const TimeSeries series = run_scan(config);
  if (config.out.empty() || config.out == "-") {
    write_csv(series, out);
  } else {
    emit_csv(series, config.out);
  }
  return kSuccess;
}

int run_figure_command(const std::string& id, const std::string& out_dir, std::ostream& out) {
  const auto curves = figure_preset(id);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory '" + out_dir + "': " + ec.message());
  for (const auto& curve : curves) {
    const auto path = std::filesystem::path(out_dir) / curve.config.out;
    emit_csv(run_scan(curve.config), path);
    out << path.string() << '\n';
  }
  return kSuccess;
}

int run_validate_command(std::ostream& out) {
  bool all_passed = true;
  for (const auto& r : run_checks(acceptance_checks())) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title << ": " << r.detail
        << " (" << r.seconds << " s)\n";
    all_passed = all_passed && r.passed;
  }
  return all_passed ? kSuccess : kNumericFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moving-qubit cavity dynamics and swapped-entanglement calculator", "qmswap"};
  app.require_subcommand(1);

  auto* scan = app.add_subcommand("scan", "Evaluate one observable on a time grid");
  std::string config_path;
  scan->add_option("--config", config_path, "Flat key = value config file (flags override)");
  std::map<std::string, std::optional<std::string>> flags;
  for (const auto key : config_keys()) flags[std::string(key)];
  for (auto& [key, value] : flags) {
    scan->add_option("--" + key, value);
  }

  auto* figure = app.add_subcommand("figure", "Write the CSV curves of a figure preset");
  std::string figure_id;
  std::string out_dir = ".";
  figure->add_option("id", figure_id, "fig2a fig2b fig3a fig3b fig5 fig6 fig7 fig8a fig8b")
      ->required();
  figure->add_option("--out-dir", out_dir, "Directory for the CSV files");

  auto* validate = app.add_subcommand("validate", "Run the invariant and oracle suite");

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*scan) return run_scan_command(config_path, flags, out);
    if (*figure) return run_figure_command(figure_id, out_dir, out);
    if (*validate) return run_validate_command(out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsageError;
}

}  // namespace qmswap::cli
