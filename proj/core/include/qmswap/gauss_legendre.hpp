#pragma once

#include <cstddef>
#include <vector>

namespace qmswap {

/// n-point Gauss-Legendre rule on [-1, 1], exact for polynomials of degree
/// 2n - 1.
class GaussLegendreRule {
 public:
  explicit GaussLegendreRule(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] const std::vector<double>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }

  /// Integral of f over [a, b] with the rule mapped affinely.
  template <typename F>
  [[nodiscard]] double integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      sum += weights_[i] * f(mid + half * nodes_[i]);
    }
    return half * sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace qmswap
