#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qmswap/entanglement.hpp"
#include "qmswap/entangling_power.hpp"
#include "qmswap/error.hpp"
#include "qmswap/validation.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

// Brute-force phase average of the closed-form concurrence.
double phase_average(double t1, double t2, double p) {
  const int n = 4096;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double phi = 2.0 * kPi * (k + 0.5) / n;
    const auto s = qmswap::post_bsm_projection(qmswap::BlochAngles(t1, phi), qmswap::BlochAngles(t2, 0.0),
                                               std::sqrt(p));
    sum += qmswap::concurrence_closed(s);
  }
  return sum / n;
}

}  // namespace

TEST(ReducedIntegrand, Examples) {
  EXPECT_EQ(qmswap::reduced_integrand(0.3, 1.2, 0.0), 0.0);
  EXPECT_NEAR(qmswap::reduced_integrand(0.0, 0.0, 0.5), 1.0, 1e-15);
  for (double p : {0.1, 0.5, 1.0}) {
    EXPECT_NEAR(qmswap::reduced_integrand(kPi / 2.0, 0.0, p), 2.0 * p / (2.0 * p + 1.0), 1e-14);
  }
  EXPECT_EQ(qmswap::reduced_integrand(kPi, 0.4, 1.0), 0.0);
}

TEST(ReducedIntegrand, MatchesPhaseAverage) {
  for (auto [t1, t2, p] : {std::tuple{0.4, 1.9, 0.3}, std::tuple{2.5, 2.4, 0.9}, std::tuple{1.0, 0.2, 0.05}}) {
    EXPECT_NEAR(qmswap::reduced_integrand(t1, t2, p), phase_average(t1, t2, p), 1e-6);
  }
}

TEST(Quadrature, EndPoints) {
  EXPECT_EQ(qmswap::entangling_power_quadrature(0.0, {}), 0.0);
  EXPECT_NEAR(qmswap::entangling_power_quadrature(0.5, {}), 1.0 / 3.0, 1e-9);
  const double full = qmswap::entangling_power_quadrature(1.0, {});
  EXPECT_LT(std::abs(full - qmswap::kGoldenPowerAtFullPopulation), 3.0 * qmswap::kGoldenPowerStdError);
}

TEST(Quadrature, MonotoneInPopulation) {
  double prev = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double v = qmswap::entangling_power_quadrature(i / 20.0, {});
    EXPECT_GT(v, prev);
    EXPECT_LE(v, 1.0);
    prev = v;
  }
}

TEST(Quadrature, TinyPopulationsConverge) {
  for (double p : {1e-16, 1e-12, 1e-8, 1e-4}) {
    const double v = qmswap::entangling_power_quadrature(p, {});
    EXPECT_GT(v, 0.0) << p;
    EXPECT_LT(v, 1e-1) << p;
  }
}

TEST(Quadrature, RefinementIsStable) {
  const double coarse = qmswap::entangling_power_quadrature(0.3, {16, 1e-9});
  const double fine = qmswap::entangling_power_quadrature(0.3, {48, 1e-10});
  EXPECT_NEAR(coarse, fine, 1e-9);
}

TEST(Quadrature, SpecValidation) {
  EXPECT_THROW((void)qmswap::entangling_power_quadrature(0.5, {8, 1e-9}), qmswap::RangeError);
  EXPECT_THROW((void)qmswap::entangling_power_quadrature(0.5, {16, 1e-12}), qmswap::RangeError);
  EXPECT_THROW((void)qmswap::entangling_power_quadrature(1.5, {}), qmswap::RangeError);
  EXPECT_THROW((void)qmswap::entangling_power_quadrature(-0.1, {}), qmswap::RangeError);
}

TEST(MonteCarlo, ZeroPopulation) {
  const auto est = qmswap::entangling_power_mc(0.0, {10000, 1});
  EXPECT_EQ(est.mean, 0.0);
  EXPECT_EQ(est.std_error, 0.0);
}

TEST(MonteCarlo, Deterministic) {
  const auto a = qmswap::entangling_power_mc(0.7, {20000, 77});
  const auto b = qmswap::entangling_power_mc(0.7, {20000, 77});
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
  const auto c = qmswap::entangling_power_mc(0.7, {20000, 78});
  EXPECT_NE(a.mean, c.mean);
  EXPECT_THROW((void)qmswap::entangling_power_mc(0.7, {100, 1}), qmswap::RangeError);
}

TEST(MonteCarlo, AgreesWithQuadrature) {
  const auto est = qmswap::entangling_power_mc(1.0, {1000000, 2025});
  EXPECT_LT(std::abs(est.mean - qmswap::entangling_power_quadrature(1.0, {})), 3.0 * est.std_error);
}

TEST(Table, InterpolatesWithinBound) {
  const auto table = qmswap::EntanglingPowerTable::build({});
  ASSERT_TRUE(table.has_value());
  EXPECT_LT(table->validation_error(), 1e-6);
  EXPECT_EQ(table->nodes(), 129u);
  for (double p : {0.0, 0.013, 0.37, 0.81, 0.999, 1.0}) {
    EXPECT_NEAR((*table)(p), qmswap::entangling_power_quadrature(p, {}), 1e-6) << p;
  }
}

TEST(Table, RejectedWhenTooCoarse) {
  EXPECT_FALSE(qmswap::EntanglingPowerTable::build({}, 5, 1e-9).has_value());
}

TEST(PowerSeries, DependsOnlyOnPopulation) {
  const std::vector<double> taus{0.0, 1.0, 2.0};
  const std::vector<std::complex<double>> e{1.0, std::complex<double>(0.0, 0.6), 0.6};
  const auto s = qmswap::entangling_power_series(taus, e, {});
  ASSERT_EQ(s.size(), 3u);
  const auto col = s.column("power");
  EXPECT_NEAR(col[0], qmswap::kGoldenPowerAtFullPopulation, 3.0 * qmswap::kGoldenPowerStdError);
  EXPECT_EQ(col[1], col[2]);

  qmswap::PowerSettings mc;
  mc.method = qmswap::PowerMethod::MonteCarlo;
  mc.monte_carlo = {10000, 3};
  const auto m = qmswap::entangling_power_series(taus, e, mc);
  EXPECT_EQ(m.value_names(), (std::vector<std::string>{"power", "power_stderr"}));
  EXPECT_EQ(m.column("power")[1], m.column("power")[2]);
}

TEST(PowerSeries, LengthMismatch) {
  const std::vector<double> taus{0.0, 1.0};
  const std::vector<std::complex<double>> e{1.0};
  EXPECT_THROW((void)qmswap::entangling_power_series(taus, e, {}), qmswap::RangeError);
}
