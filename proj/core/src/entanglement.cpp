#include "qmswap/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qmswap/error.hpp"

namespace qmswap {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_amplitude(Complex amplitude) {
  if (!(std::abs(amplitude) <= 1.0 + 1e-9)) {
    throw RangeError("|E| must not exceed 1 (got " + std::to_string(std::abs(amplitude)) + ")");
  }
}

double bounded_population(Complex amplitude) {
  return std::min(1.0, std::norm(amplitude));
}

}  // namespace

BlochAngles::BlochAngles(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
    throw RangeError("theta must lie in [0, pi] (got " + std::to_string(theta) + ")");
  }
  if (!std::isfinite(phi)) throw RangeError("phi must be finite");
  phi_ = std::fmod(phi, kTwoPi);
  if (phi_ < 0.0) phi_ += kTwoPi;
  if (phi_ >= kTwoPi) phi_ = 0.0;
}

BlochAngles sample_haar(UniformSource& source) {
  const double cos_theta = std::clamp(2.0 * source.next() - 1.0, -1.0, 1.0);
  const double phi = kTwoPi * source.next();
  return BlochAngles(std::acos(cos_theta), phi);
}

double linear_entropy(double theta, Complex amplitude) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw RangeError("theta must lie in [0, pi]");
  check_amplitude(amplitude);
  const double p = bounded_population(amplitude);
  const double c2 = half_cos(theta) * half_cos(theta);
  return 2.0 * (1.0 - p) * p * c2 * c2;
}

double average_linear_entropy(Complex amplitude) {
  check_amplitude(amplitude);
  const double p = bounded_population(amplitude);
  return 2.0 / 3.0 * (1.0 - p) * p;
}

McEstimate average_linear_entropy_mc(double population, const MonteCarloSpec& spec) {
  spec.validate();
  if (!(population >= 0.0 && population <= 1.0)) throw RangeError("population must lie in [0, 1]");
  const Complex amplitude(std::sqrt(population), 0.0);
  UniformSource source(spec.seed);
  RunningMean acc;
  for (std::uint64_t i = 0; i < spec.n_samples; ++i) {
    acc.add(linear_entropy(sample_haar(source).theta(), amplitude));
  }
  return acc.estimate();
}

PostBsmState post_bsm_projection(const BlochAngles& qubit1, const BlochAngles& qubit2,
                                 Complex amplitude) {
  check_amplitude(amplitude);
  const double c1 = half_cos(qubit1.theta());
  const double s1 = std::sin(0.5 * qubit1.theta());
  const double c2 = half_cos(qubit2.theta());
  const double s2 = std::sin(0.5 * qubit2.theta());
  PostBsmState state;
  state.x = c1 * c2 * amplitude;
  state.y = s1 * c2 * std::polar(1.0, qubit1.phi()) - s2 * c1 * std::polar(1.0, qubit2.phi());
  state.norm = 2.0 * std::norm(state.x) + std::norm(state.y);
  return state;
}

double concurrence_closed(const PostBsmState& state) {
  if (!(state.norm >= kZeroNorm)) {
    throw NumericError(NumericErrorKind::ZeroNorm, "post-measurement state has vanishing norm");
  }
  return std::clamp(2.0 * std::norm(state.x) / state.norm, 0.0, 1.0);
}

std::array<double, 4> DensityMatrix4::populations() const {
  return {m_(kEE, kEE).real(), m_(kEG, kEG).real(), m_(kGE, kGE).real(), m_(kGG, kGG).real()};
}

DensityMatrix4 density_matrix(const PostBsmState& state) {
  if (!(state.norm >= kZeroNorm)) {
    throw NumericError(NumericErrorKind::ZeroNorm, "post-measurement state has vanishing norm");
  }
  Eigen::Vector4cd psi;
  psi << Complex{}, state.x, -state.x, state.y;
  psi /= std::sqrt(state.norm);
  return DensityMatrix4(psi * psi.adjoint());
}

double concurrence_wootters(const DensityMatrix4& rho) {
  const Eigen::Matrix4cd& m = rho.matrix();
  const double hermiticity = (m - m.adjoint()).cwiseAbs().maxCoeff();
  const double trace_error = std::abs(m.trace() - 1.0);
  if (!(hermiticity <= 1e-12) || !(trace_error <= 1e-12)) {
    std::ostringstream msg;
    msg << "density matrix not Hermitian/unit trace (|rho - rho^+| = " << hermiticity
        << ", |tr - 1| = " << trace_error << ")";
    throw NumericError(NumericErrorKind::NonPhysicalInput, msg.str());
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(0.5 * (m + m.adjoint()));
  Eigen::Vector4d weights = eig.eigenvalues();
  if (weights.minCoeff() < -1e-10) {
    throw NumericError(NumericErrorKind::NonPhysicalInput,
                       "density matrix has a negative eigenvalue below -1e-10");
  }
  weights = weights.cwiseMax(0.0).cwiseSqrt();

  // rho = W W^+; the spin-flip spectrum square roots are the singular values
  // of the symmetric matrix W^T (sy x sy) W.
  const Eigen::Matrix4cd w = eig.eigenvectors() * weights.asDiagonal();
  Eigen::Matrix4cd spin_flip = Eigen::Matrix4cd::Zero();
  spin_flip(kEE, kGG) = -1.0;
  spin_flip(kEG, kGE) = 1.0;
  spin_flip(kGE, kEG) = 1.0;
  spin_flip(kGG, kEE) = -1.0;
  const Eigen::Matrix4cd tau = w.transpose() * spin_flip * w;
  const Eigen::Vector4d s = Eigen::JacobiSVD<Eigen::Matrix4cd>(tau).singularValues();
  return std::clamp(s(0) - s(1) - s(2) - s(3), 0.0, 1.0);
}

const char* to_string(InitialStateClass c) noexcept {
  switch (c) {
    case InitialStateClass::MaximallyEntangled:
      return "MaximallyEntangled";
    case InitialStateClass::AlwaysZero:
      return "AlwaysZero";
    case InitialStateClass::Generic:
      return "Generic";
  }
  return "Unknown";
}

InitialStateClass classify_initial_state(const BlochAngles& qubit1, const BlochAngles& qubit2) {
  const double excited_overlap = half_cos(qubit1.theta()) * half_cos(qubit2.theta());
  if (excited_overlap < 1e-12) return InitialStateClass::AlwaysZero;
  const double y_squared =
      0.5 * (1.0 - std::cos(qubit1.theta()) * std::cos(qubit2.theta()) -
             std::sin(qubit1.theta()) * std::sin(qubit2.theta()) *
                 std::cos(qubit1.phi() - qubit2.phi()));
  if (y_squared < 1e-12) return InitialStateClass::MaximallyEntangled;
  return InitialStateClass::Generic;
}

}  // namespace qmswap
