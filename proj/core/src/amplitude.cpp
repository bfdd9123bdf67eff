#include "qmswap/amplitude.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "qmswap/error.hpp"

namespace qmswap {
namespace {

Complex cubic_value(const CubicCoefficients& c, Complex q) {
  return ((q + c.a2) * q + c.a1) * q + c.a0;
}

Complex cubic_derivative(const CubicCoefficients& c, Complex q) {
  return (3.0 * q + 2.0 * c.a2) * q + c.a1;
}

Complex polish_root(const CubicCoefficients& c, Complex q) {
  double residual = std::abs(cubic_value(c, q));
  for (int iter = 0; iter < 8 && residual > 0.0; ++iter) {
    const Complex slope = cubic_derivative(c, q);
    if (slope == Complex{}) break;
    const Complex candidate = q - cubic_value(c, q) / slope;
    const double candidate_residual = std::abs(cubic_value(c, candidate));
    if (!(candidate_residual < residual)) break;
    q = candidate;
    residual = candidate_residual;
  }
  return q;
}

// Ascending real part; real parts within round-off count as tied and are
// ordered by imaginary part.
bool root_before(Complex a, Complex b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(a.real() - b.real()) > 1e-12 * scale) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

KernelRates kernel_rates(const ModelParams& params) {
  const Complex shift = params.beta * Complex(1.0, params.omega);
  return {1.0 + shift, 1.0 - shift};
}

CubicCoefficients cubic_coefficients(const ModelParams& params) {
  // y+ y- = 1 - beta^2 (1 + i Omega)^2, expanded so the tiny imaginary part
  // does not come out of a cancellation between the two rates.
  const double b2 = params.beta * params.beta;
  const double half_r2 = 0.5 * params.R * params.R;
  const Complex product(1.0 + b2 * (params.omega * params.omega - 1.0), -2.0 * b2 * params.omega);
  return {Complex(2.0, 0.0), product + half_r2, Complex(half_r2, 0.0)};
}

std::array<Complex, 3> solve_cubic(const CubicCoefficients& c) {
  Eigen::Matrix3cd companion;
  companion << -c.a2, -c.a1, -c.a0,
               1.0, 0.0, 0.0,
               0.0, 1.0, 0.0;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(companion, /*computeEigenvectors=*/false);
  std::array<Complex, 3> roots{};
  for (int i = 0; i < 3; ++i) {
    roots[static_cast<std::size_t>(i)] = polish_root(c, solver.eigenvalues()(i));
  }
  // Three elements: an insertion sort keeps the tie rule deterministic.
  for (std::size_t i = 1; i < roots.size(); ++i) {
    for (std::size_t j = i; j > 0 && root_before(roots[j], roots[j - 1]); --j) {
      std::swap(roots[j], roots[j - 1]);
    }
  }
  return roots;
}

double AmplitudeModel::normalization_residual() const noexcept {
  return std::abs(weights_[0] + weights_[1] + weights_[2] - 1.0);
}

double AmplitudeModel::derivative_residual() const noexcept {
  return std::abs(weights_[0] * roots_[0] + weights_[1] * roots_[1] + weights_[2] * roots_[2]);
}

AmplitudeModel build_amplitude_model(const ModelParams& params) {
  params.validate();
  AmplitudeModel model;
  model.params_ = params;
  model.roots_ = solve_cubic(cubic_coefficients(params));

  const auto& q = model.roots_;
  double max_modulus = 0.0;
  for (const auto& root : q) max_modulus = std::max(max_modulus, std::abs(root));
  const double min_gap =
      std::min({std::abs(q[0] - q[1]), std::abs(q[0] - q[2]), std::abs(q[1] - q[2])});
  model.degenerate_ = min_gap < kDegeneracyGap * std::max(1.0, max_modulus);
  if (model.degenerate_) return model;

  const auto [y_plus, y_minus] = kernel_rates(params);
  for (std::size_t i = 0; i < 3; ++i) {
    Complex denominator{1.0, 0.0};
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) denominator *= q[i] - q[j];
    }
    model.weights_[i] = (q[i] + y_plus) * (q[i] + y_minus) / denominator;
  }
  return model;
}

Complex amplitude(const AmplitudeModel& model, double tau) {
  if (model.degenerate()) {
    throw NumericError(NumericErrorKind::DegenerateModel,
                       "root set is degenerate; evaluate with the ODE oracle");
  }
  if (!(tau >= 0.0)) throw RangeError("tau must be >= 0");
  Complex sum{};
  for (std::size_t i = 0; i < 3; ++i) {
    sum += model.weights()[i] * std::exp(model.roots()[i] * tau);
  }
  return sum;
}

std::vector<Complex> amplitude_ode_oracle(const ModelParams& params, const TimeGrid& grid,
                                          double step) {
  params.validate();
  grid.validate();
  const auto [y_plus, y_minus] = kernel_rates(params);
  if (!(step > 0.0)) throw RangeError("ODE step must be > 0");
  const double stiffness = std::max(std::abs(y_plus), std::abs(y_minus));
  if (step * stiffness > kMaxOracleStepRate) {
    std::ostringstream msg;
    msg << "step " << step << " times max|y| " << stiffness << " exceeds "
        << kMaxOracleStepRate;
    throw NumericError(NumericErrorKind::StepTooLarge, msg.str());
  }

  const double coupling = 0.25 * params.R * params.R;
  struct State {
    Complex e, z_plus, z_minus;
  };
  const auto rhs = [&](const State& s) {
    return State{-coupling * (s.z_plus + s.z_minus), s.e - y_plus * s.z_plus,
                 s.e - y_minus * s.z_minus};
  };
  const auto axpy = [](const State& s, double h, const State& k) {
    return State{s.e + h * k.e, s.z_plus + h * k.z_plus, s.z_minus + h * k.z_minus};
  };

  State state{Complex(1.0, 0.0), Complex{}, Complex{}};
  double now = 0.0;
  std::vector<Complex> out;
  out.reserve(grid.n_points);
  for (const double target : grid.points()) {
    const double span = target - now;
    if (span > 0.0) {
      const auto substeps = static_cast<std::size_t>(std::ceil(span / step));
      const double h = span / static_cast<double>(substeps);
      for (std::size_t n = 0; n < substeps; ++n) {
        const State k1 = rhs(state);
        const State k2 = rhs(axpy(state, 0.5 * h, k1));
        const State k3 = rhs(axpy(state, 0.5 * h, k2));
        const State k4 = rhs(axpy(state, h, k3));
        state.e += h / 6.0 * (k1.e + 2.0 * k2.e + 2.0 * k3.e + k4.e);
        state.z_plus += h / 6.0 * (k1.z_plus + 2.0 * k2.z_plus + 2.0 * k3.z_plus + k4.z_plus);
        state.z_minus +=
            h / 6.0 * (k1.z_minus + 2.0 * k2.z_minus + 2.0 * k3.z_minus + k4.z_minus);
      }
      now = target;
    }
    out.push_back(state.e);
  }
  return out;
}

Complex closed_form_beta0(double R, double tau) {
  if (!(R > 0.0)) throw RangeError("R must be > 0");
  if (!(tau >= 0.0)) throw RangeError("tau must be >= 0");
  const Complex d = std::sqrt(Complex(1.0 - 2.0 * R * R, 0.0));
  const Complex x = 0.5 * d * tau;
  const double envelope = std::exp(-0.5 * tau);
  if (std::abs(x) < 1e-4) {
    // cosh x + (tau/2) sinh(x)/x, Taylor to O(x^6); exact at D = 0.
    const Complex x2 = x * x;
    const Complex cosh_x = 1.0 + x2 / 2.0 + x2 * x2 / 24.0;
    const Complex sinhc_x = 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
    return envelope * (cosh_x + 0.5 * tau * sinhc_x);
  }
  // Exponential form avoids overflow of cosh/sinh at large tau.
  const Complex grow = std::exp((d - 1.0) * 0.5 * tau);
  const Complex shrink = std::exp((-d - 1.0) * 0.5 * tau);
  return 0.5 * (grow + shrink) + 0.5 * (grow - shrink) / d;
}

std::vector<Complex> amplitude_series(const ModelParams& params, const TimeGrid& grid,
                                      AmplitudeMethod method, double ode_step) {
  grid.validate();
  if (method == AmplitudeMethod::Analytic) {
    const AmplitudeModel model = build_amplitude_model(params);
    if (!model.degenerate()) {
      std::vector<Complex> out;
      out.reserve(grid.n_points);
      for (const double tau : grid.points()) out.push_back(amplitude(model, tau));
      return out;
    }
  }
  return amplitude_ode_oracle(params, grid, ode_step);
}

std::vector<double> population_crossings(const AmplitudeModel& model, const TimeGrid& grid,
                                         double level) {
  grid.validate();
  const auto excess = [&](double tau) { return std::norm(amplitude(model, tau)) - level; };
  const std::vector<double> taus = grid.points();
  std::vector<double> crossings;
  double prev_tau = taus.front();
  double prev_val = excess(prev_tau);
  if (prev_val == 0.0) crossings.push_back(prev_tau);
  for (std::size_t i = 1; i < taus.size(); ++i) {
    const double tau = taus[i];
    const double val = excess(tau);
    if (val == 0.0) {
      crossings.push_back(tau);
    } else if (prev_val != 0.0 && (prev_val < 0.0) != (val < 0.0)) {
      double lo = prev_tau;
      double hi = tau;
      double lo_val = prev_val;
      for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double mid_val = excess(mid);
        if ((mid_val < 0.0) == (lo_val < 0.0)) {
          lo = mid;
          lo_val = mid_val;
        } else {
          hi = mid;
        }
      }
      crossings.push_back(0.5 * (lo + hi));
    }
    prev_tau = tau;
    prev_val = val;
  }
  return crossings;
}

}  // namespace qmswap
