#pragma once

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "qmswap/sampling.hpp"

namespace qmswap {

using Complex = std::complex<double>;

/// Initial qubit state cos(theta/2)|e> + sin(theta/2) e^{i phi}|g>.
class BlochAngles {
 public:
  /// theta must lie in [0, pi]; phi is reduced into [0, 2 pi).
  BlochAngles(double theta, double phi);

  [[nodiscard]] double theta() const noexcept { return theta_; }
  [[nodiscard]] double phi() const noexcept { return phi_; }

  friend bool operator==(const BlochAngles&, const BlochAngles&) = default;

 private:
  double theta_;
  double phi_;
};

/// cos(theta/2) written as sin((pi - theta)/2) so that theta = pi gives an
/// exact zero; the plain cosine leaves a 6e-17 residue there.
[[nodiscard]] inline double half_cos(double theta) {
  return std::sin(0.5 * (std::numbers::pi - theta));
}

/// Haar-random pure qubit state: cos(theta) uniform on [-1, 1], phi uniform.
[[nodiscard]] BlochAngles sample_haar(UniformSource& source);

/// Subsystem linear entropy 2(1 - p) p cos^4(theta/2), p = |E|^2.
[[nodiscard]] double linear_entropy(double theta, Complex amplitude);

/// Haar average of linear_entropy over the Bloch sphere: (2/3)(1 - p) p.
[[nodiscard]] double average_linear_entropy(Complex amplitude);

/// Monte Carlo estimate of the Haar-averaged linear entropy at population p.
[[nodiscard]] McEstimate average_linear_entropy_mc(double population, const MonteCarloSpec& spec);

/// Unnormalized two-qubit state X(|eg> - |ge>) + Y|gg> left behind by the
/// psi- projection of the two leaked fields; norm = 2|X|^2 + |Y|^2.
struct PostBsmState {
  Complex x;
  Complex y;
  double norm = 0.0;
};

/// Projections with norm below this have vanishing success probability.
inline constexpr double kZeroNorm = 1e-30;

[[nodiscard]] PostBsmState post_bsm_projection(const BlochAngles& qubit1,
                                               const BlochAngles& qubit2, Complex amplitude);

/// 2|X|^2 / N. Throws NumericError(ZeroNorm) when N < kZeroNorm.
[[nodiscard]] double concurrence_closed(const PostBsmState& state);

/// Computational basis order used by every 4x4 object in the library.
enum BasisIndex : int { kEE = 0, kEG = 1, kGE = 2, kGG = 3 };

/// Two-qubit density matrix in the (ee, eg, ge, gg) basis.
class DensityMatrix4 {
 public:
  explicit DensityMatrix4(const Eigen::Matrix4cd& m) : m_(m) {}

  [[nodiscard]] const Eigen::Matrix4cd& matrix() const noexcept { return m_; }
  /// Diagonal in basis order.
  [[nodiscard]] std::array<double, 4> populations() const;

 private:
  Eigen::Matrix4cd m_;
};

/// Outer product of (0, X, -X, Y)/sqrt(N). Throws ZeroNorm.
[[nodiscard]] DensityMatrix4 density_matrix(const PostBsmState& state);

/// Wootters concurrence max{0, s1 - s2 - s3 - s4} with s_i the square roots
/// of the eigenvalues of rho (sy x sy) rho* (sy x sy). Throws
/// NumericError(NonPhysicalInput) if rho is not Hermitian, unit-trace and
/// positive semidefinite within tolerance.
[[nodiscard]] double concurrence_wootters(const DensityMatrix4& rho);

enum class InitialStateClass { MaximallyEntangled, AlwaysZero, Generic };

[[nodiscard]] const char* to_string(InitialStateClass c) noexcept;

/// Classifies a product initial state by the long-time behaviour of its
/// swapped concurrence.
[[nodiscard]] InitialStateClass classify_initial_state(const BlochAngles& qubit1,
                                                       const BlochAngles& qubit2);

}  // namespace qmswap
