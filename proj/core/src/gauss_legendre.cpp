#include "qmswap/gauss_legendre.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qmswap/error.hpp"

namespace qmswap {
namespace {

// (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x) {
  double p_prev = 1.0;
  double p = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const auto kd = static_cast<double>(k);
    const double p_next = ((2.0 * kd - 1.0) * x * p - (kd - 1.0) * p_prev) / kd;
    p_prev = p;
    p = p_next;
  }
  const auto nd = static_cast<double>(n);
  return {p, nd * (x * p - p_prev) / (x * x - 1.0)};
}

}  // namespace

GaussLegendreRule::GaussLegendreRule(std::size_t n) : nodes_(n), weights_(n) {
  if (n == 0) throw RangeError("Gauss-Legendre rule needs at least one node");
  const auto nd = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

}  // namespace qmswap
