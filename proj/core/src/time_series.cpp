#include "qmswap/time_series.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qmswap/error.hpp"

namespace qmswap {

TimeSeries::TimeSeries(std::vector<std::string> value_names) : names_(std::move(value_names)) {
  if (names_.empty()) throw RangeError("time series needs at least one value column");
}

void TimeSeries::add_row(double tau, std::span<const double> values) {
  if (values.size() != names_.size()) {
    throw RangeError("row has " + std::to_string(values.size()) + " values, expected " +
                     std::to_string(names_.size()));
  }
  if (!taus_.empty() && !(tau > taus_.back())) {
    throw RangeError("tau must be strictly increasing");
  }
  taus_.push_back(tau);
  values_.insert(values_.end(), values.begin(), values.end());
}

std::span<const double> TimeSeries::row(std::size_t i) const {
  return std::span<const double>(values_).subspan(i * names_.size(), names_.size());
}

std::vector<double> TimeSeries::column(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw RangeError("no column named '" + name + "'");
  const auto index = static_cast<std::size_t>(it - names_.begin());
  std::vector<double> out;
  out.reserve(taus_.size());
  for (std::size_t i = 0; i < taus_.size(); ++i) out.push_back(row(i)[index]);
  return out;
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, result.ptr);
}

void write_csv(const TimeSeries& series, std::ostream& out) {
  std::string text = "tau";
  for (const auto& name : series.value_names()) {
    text += ',';
    text += name;
  }
  text += '\n';
  for (std::size_t i = 0; i < series.size(); ++i) {
    text += format_double(series.taus()[i]);
    for (const double v : series.row(i)) {
      text += ',';
      text += format_double(v);
    }
    text += '\n';
  }
  out << text;
}

void emit_csv(const TimeSeries& series, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(series, file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace qmswap
