#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qmswap {

/// Observable values sampled on strictly increasing scaled times.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<std::string> value_names);

  /// Throws RangeError if tau does not increase or the width is wrong.
  void add_row(double tau, std::span<const double> values);

  [[nodiscard]] const std::vector<std::string>& value_names() const noexcept { return names_; }
  [[nodiscard]] const std::vector<double>& taus() const noexcept { return taus_; }
  [[nodiscard]] std::size_t size() const noexcept { return taus_.size(); }
  [[nodiscard]] std::span<const double> row(std::size_t i) const;
  /// All samples of one named column.
  [[nodiscard]] std::vector<double> column(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::vector<double> taus_;
  std::vector<double> values_;  // row-major
};

/// 17 significant digits in `%.17g` style; round-trips every double.
[[nodiscard]] std::string format_double(double value);

/// Header `tau,<names...>` then one row per sample, LF line endings.
void write_csv(const TimeSeries& series, std::ostream& out);

/// Writes the CSV to `path`; throws IoError naming the path on failure.
void emit_csv(const TimeSeries& series, const std::filesystem::path& path);

}  // namespace qmswap
