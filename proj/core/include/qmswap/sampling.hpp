#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qmswap {

struct MonteCarloSpec {
  std::uint64_t n_samples = 100000;
  std::uint64_t seed = 42;

  /// Reported estimates need at least 1e4 samples.
  void validate() const;

  friend bool operator==(const MonteCarloSpec&, const MonteCarloSpec&) = default;
};

inline constexpr std::uint64_t kMinMonteCarloSamples = 10000;

/// Sample mean with its standard error.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Uniform doubles in [0, 1) from mt19937_64, using the top 53 bits so the
/// stream is identical on every standard library.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Welford accumulator.
class RunningMean {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  [[nodiscard]] McEstimate estimate() const {
    McEstimate out{mean_, 0.0, count_};
    if (count_ > 1) {
      const double variance = m2_ / static_cast<double>(count_ - 1);
      out.std_error = std::sqrt(variance / static_cast<double>(count_));
    }
    return out;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace qmswap
