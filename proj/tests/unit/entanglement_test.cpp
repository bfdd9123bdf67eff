#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qmswap/entanglement.hpp"
#include "qmswap/error.hpp"

using qmswap::BlochAngles;
using qmswap::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix4cd projector(const Eigen::Vector4cd& v) { return v * v.adjoint(); }

}  // namespace

TEST(BlochAngles, Domain) {
  EXPECT_NO_THROW(BlochAngles(0.0, 0.0));
  EXPECT_NO_THROW(BlochAngles(kPi, 0.0));
  EXPECT_THROW(BlochAngles(-0.1, 0.0), qmswap::RangeError);
  EXPECT_THROW(BlochAngles(3.2, 0.0), qmswap::RangeError);
  EXPECT_NEAR(BlochAngles(1.0, 2.0 * kPi + 0.5).phi(), 0.5, 1e-15);
  EXPECT_NEAR(BlochAngles(1.0, -0.5).phi(), 2.0 * kPi - 0.5, 1e-15);
}

TEST(BlochAngles, HalfCosIsExactAtPi) {
  EXPECT_EQ(qmswap::half_cos(kPi), 0.0);
  EXPECT_EQ(qmswap::half_cos(0.0), 1.0);
  EXPECT_NEAR(qmswap::half_cos(kPi / 2.0), std::sqrt(0.5), 2e-16);
}

TEST(LinearEntropy, Values) {
  const Complex half(std::sqrt(0.5), 0.0);
  EXPECT_NEAR(qmswap::linear_entropy(0.0, half), 0.5, 1e-15);
  EXPECT_EQ(qmswap::linear_entropy(kPi, half), 0.0);
  EXPECT_EQ(qmswap::linear_entropy(kPi, Complex(0.3, 0.4)), 0.0);
  EXPECT_NEAR(qmswap::linear_entropy(0.0, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(qmswap::average_linear_entropy(half), 1.0 / 6.0, 1e-15);
  EXPECT_EQ(qmswap::average_linear_entropy(0.0), 0.0);
  EXPECT_NEAR(qmswap::average_linear_entropy(1.0), 0.0, 1e-15);
}

TEST(LinearEntropy, HaarAverageMonteCarlo) {
  const auto est = qmswap::average_linear_entropy_mc(0.7, {1000000, 11});
  EXPECT_LT(std::abs(est.mean - 0.14), 3.0 * est.std_error);
  EXPECT_EQ(est.samples, 1000000u);
}

TEST(PostBsm, EqualAnglesGiveBellState) {
  const Complex e(0.6, -0.3);
  const BlochAngles q(kPi / 2.0, 0.0);
  const auto s = qmswap::post_bsm_projection(q, q, e);
  EXPECT_NEAR(std::abs(s.x - e / 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.y), 0.0, 1e-15);
  EXPECT_NEAR(s.norm, std::norm(e) / 2.0, 1e-15);
  EXPECT_NEAR(qmswap::concurrence_closed(s), 1.0, 1e-15);

  const auto pops = qmswap::density_matrix(s).populations();
  EXPECT_NEAR(pops[qmswap::kEE], 0.0, 1e-15);
  EXPECT_NEAR(pops[qmswap::kEG], 0.5, 1e-15);
  EXPECT_NEAR(pops[qmswap::kGE], 0.5, 1e-15);
  EXPECT_NEAR(pops[qmswap::kGG], 0.0, 1e-15);
}

TEST(PostBsm, ExcitedTimesPlusState) {
  const Complex e(0.8, 0.1);
  const auto s = qmswap::post_bsm_projection(BlochAngles(0.0, 0.0), BlochAngles(kPi / 2.0, 0.0), e);
  EXPECT_NEAR(std::abs(s.x - std::sqrt(0.5) * e), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.y - Complex(-std::sqrt(0.5), 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(s.norm, std::norm(e) + 0.5, 1e-15);
  const double p = std::norm(e);
  EXPECT_NEAR(qmswap::concurrence_closed(s), 2.0 * p / (2.0 * p + 1.0), 1e-15);

  const auto full = qmswap::post_bsm_projection(BlochAngles(0.0, 0.0), BlochAngles(kPi / 2.0, 0.0), 1.0);
  EXPECT_NEAR(qmswap::concurrence_closed(full), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(qmswap::density_matrix(full).populations()[qmswap::kGG], 1.0 / 3.0, 1e-15);
}

TEST(PostBsm, GroundStateQubitKillsConcurrence) {
  const auto s = qmswap::post_bsm_projection(BlochAngles(kPi, 1.0), BlochAngles(0.7, 2.0), Complex(0.5, 0.5));
  EXPECT_EQ(s.x, Complex(0.0, 0.0));
  EXPECT_NEAR(s.norm, std::norm(s.y), 1e-16);
  EXPECT_EQ(qmswap::concurrence_closed(s), 0.0);
}

TEST(PostBsm, ZeroNorm) {
  // both ground: N = |Y|^2 = 0
  const auto s = qmswap::post_bsm_projection(BlochAngles(kPi, 0.0), BlochAngles(kPi, 0.0), 1.0);
  try {
    (void)qmswap::concurrence_closed(s);
    FAIL() << "expected ZeroNorm";
  } catch (const qmswap::NumericError& e) {
    EXPECT_EQ(e.kind(), qmswap::NumericErrorKind::ZeroNorm);
  }
  EXPECT_THROW((void)qmswap::density_matrix(s), qmswap::NumericError);
}

TEST(Wootters, ReferenceStates) {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(qmswap::kEG) = std::sqrt(0.5);
  psi(qmswap::kGE) = -std::sqrt(0.5);
  EXPECT_NEAR(qmswap::concurrence_wootters(qmswap::DensityMatrix4(projector(psi))), 1.0, 1e-12);

  Eigen::Vector4cd gg = Eigen::Vector4cd::Zero();
  gg(qmswap::kGG) = 1.0;
  EXPECT_NEAR(qmswap::concurrence_wootters(qmswap::DensityMatrix4(projector(gg))), 0.0, 1e-12);

  // Werner state: C = max(0, 2F - 1) with F the singlet weight
  const double F = 0.8;
  const Eigen::Matrix4cd werner =
      F * projector(psi) + (1.0 - F) / 3.0 * (Eigen::Matrix4cd::Identity() - projector(psi));
  EXPECT_NEAR(qmswap::concurrence_wootters(qmswap::DensityMatrix4(werner)), 0.6, 1e-12);
  EXPECT_NEAR(qmswap::concurrence_wootters(qmswap::DensityMatrix4(Eigen::Matrix4cd::Identity() / 4.0)), 0.0,
              1e-12);
}

TEST(Wootters, RejectsNonPhysical) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity() / 2.0;  // trace 2
  EXPECT_THROW((void)qmswap::concurrence_wootters(qmswap::DensityMatrix4(m)), qmswap::NumericError);
  m = Eigen::Matrix4cd::Identity() / 4.0;
  m(0, 1) = 0.1;  // not Hermitian
  EXPECT_THROW((void)qmswap::concurrence_wootters(qmswap::DensityMatrix4(m)), qmswap::NumericError);
  m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;  // negative eigenvalue
  try {
    (void)qmswap::concurrence_wootters(qmswap::DensityMatrix4(m));
    FAIL();
  } catch (const qmswap::NumericError& e) {
    EXPECT_EQ(e.kind(), qmswap::NumericErrorKind::NonPhysicalInput);
  }
}

TEST(Classify, Examples) {
  using C = qmswap::InitialStateClass;
  EXPECT_EQ(qmswap::classify_initial_state(BlochAngles(0.0, 0.0), BlochAngles(0.0, 0.0)), C::MaximallyEntangled);
  EXPECT_EQ(qmswap::classify_initial_state(BlochAngles(1.1, 0.4), BlochAngles(1.1, 0.4)), C::MaximallyEntangled);
  EXPECT_EQ(qmswap::classify_initial_state(BlochAngles(kPi, 0.0), BlochAngles(0.3, 0.0)), C::AlwaysZero);
  EXPECT_EQ(qmswap::classify_initial_state(BlochAngles(0.3, 0.0), BlochAngles(kPi, 0.0)), C::AlwaysZero);
  EXPECT_EQ(qmswap::classify_initial_state(BlochAngles(kPi / 2.0, 0.0), BlochAngles(kPi / 4.0, 0.0)), C::Generic);
  EXPECT_STREQ(qmswap::to_string(C::Generic), "Generic");
}

// Closed form and Wootters agree on random states and amplitudes.
TEST(ConcurrenceProperty, ClosedMatchesWootters) {
  qmswap::UniformSource u(555);
  for (int i = 0; i < 500; ++i) {
    const BlochAngles q1 = qmswap::sample_haar(u);
    const BlochAngles q2 = qmswap::sample_haar(u);
    const double r = std::sqrt(u.next());
    const Complex e = std::polar(r, 2.0 * kPi * u.next());
    const auto s = qmswap::post_bsm_projection(q1, q2, e);
    if (s.norm < 1e-12) continue;
    const double closed = qmswap::concurrence_closed(s);
    EXPECT_GE(closed, 0.0);
    EXPECT_LE(closed, 1.0);
    EXPECT_NEAR(closed, qmswap::concurrence_wootters(qmswap::density_matrix(s)), 1e-8);
  }
}

TEST(Sampling, HaarDeterministic) {
  qmswap::UniformSource a(9), b(9);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(qmswap::sample_haar(a), qmswap::sample_haar(b));
}
