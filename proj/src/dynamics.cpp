#include "negspin/dynamics.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace negspin {

double Superposition::weight() const {
  double w = 0.0;
  for (const auto& c : components) w += std::norm(c.coefficient) * c.spinor.squaredNorm();
  return w;
}

Superposition make_superposition(const MomentumVector& p, const PhysicalParams& params,
                                 HamiltonianKind kind,
                                 const std::array<std::complex<double>, 4>& amplitudes) {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw InvalidInput("superposition needs at least one nonzero finite amplitude");
  }
  const LabeledEigenstates states = helicity_eigenstates(p, params, kind);
  Superposition sup;
  sup.momentum = p;
  for (std::size_t i = 0; i < 4; ++i) {
    if (amplitudes[i] == std::complex<double>(0.0, 0.0)) continue;
    sup.components.push_back(
        {amplitudes[i] / std::sqrt(total), states.states[i].energy, states.states[i].spinor});
  }
  return sup;
}

void validate_superposition(const Superposition& sup, const ComplexMatrix& hamiltonian) {
  if (sup.components.empty()) throw InvalidInput("superposition has no components");
  if (!(std::abs(sup.weight() - 1.0) < 1e-12)) {
    throw InvalidInput("superposition is not normalized (weight " + std::to_string(sup.weight()) +
                       ")");
  }
  for (const auto& c : sup.components) {
    const double r = (hamiltonian * c.spinor - c.energy * c.spinor).norm();
    if (!(r < 1e-9)) {
      throw InvalidInput("superposition component is not an eigenstate (residual " +
                         std::to_string(r) + ")");
    }
  }
}

Spinor4 evolve(const Superposition& sup, double t, const PhysicalParams& params) {
  Spinor4 out = Spinor4::Zero();
  for (const auto& c : sup.components) {
    out += c.coefficient * std::polar(1.0, -c.energy * t / params.hbar) * c.spinor;
  }
  return out;
}

std::vector<TrajectorySample> observable_series(const Superposition& sup,
                                                const ComplexMatrix& observable, double t_max,
                                                std::size_t n_samples,
                                                const PhysicalParams& params) {
  if (observable.rows() != 4 || observable.cols() != 4) {
    throw InvalidInput("observable must be a 4x4 matrix");
  }
  if (!(hermiticity_residual(observable) < kHermitianTolerance)) {
    throw InvalidInput("observable is not Hermitian");
  }
  if (n_samples < kMinSeriesSamples) {
    throw InvalidInput("observable_series needs at least " + std::to_string(kMinSeriesSamples) +
                       " samples");
  }
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidInput("t_max must be positive");

  std::vector<TrajectorySample> series(n_samples);
  const double dt = t_max / static_cast<double>(n_samples - 1);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = dt * static_cast<double>(i);
    const Spinor4 phi = evolve(sup, t, params);
    series[i] = {t, (phi.adjoint() * observable * phi)(0, 0).real()};
  }
  return series;
}

FrequencyEstimate dominant_frequency(const std::vector<TrajectorySample>& series) {
  const std::size_t n = series.size();
  if (n < kMinFrequencySamples) {
    throw InvalidInput("dominant_frequency needs at least " +
                       std::to_string(kMinFrequencySamples) + " samples");
  }
  const double dt = (series.back().t - series.front().t) / static_cast<double>(n - 1);
  if (!(dt > 0.0)) throw InvalidInput("dominant_frequency: times must increase");

  double mean = 0.0;
  double scale = 1.0;
  for (const auto& s : series) {
    mean += s.value;
    scale = std::max(scale, std::abs(s.value));
  }
  mean /= static_cast<double>(n);

  std::vector<double> windowed(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                          static_cast<double>(n - 1));
    windowed[i] = w * (series[i].value - mean);
  }
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, windowed);

  const std::size_t half = n / 2;
  std::vector<double> mag(half + 1);
  for (std::size_t k = 0; k <= half; ++k) mag[k] = std::abs(spectrum[k]);

  FrequencyEstimate est;
  std::size_t peak = 1;
  for (std::size_t k = 1; k <= half; ++k) {
    if (mag[k] > mag[peak]) peak = k;
  }
  est.peak = mag[peak];
  std::vector<double> sorted(mag.begin() + 1, mag.end());
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2),
                   sorted.end());
  est.noise_floor = sorted[sorted.size() / 2];

  // Hann-windowed sinusoid of amplitude A peaks near A n / 4.
  const double roundoff = 1e-10 * scale * static_cast<double>(n);
  if (!(est.peak > kDetectionRatio * est.noise_floor) || !(est.peak > roundoff)) return est;

  double offset = 0.0;
  if (peak > 1 && peak < half) {
    const double tiny = 1e-300;
    const double a = std::log(mag[peak - 1] + tiny);
    const double b = std::log(mag[peak] + tiny);
    const double c = std::log(mag[peak + 1] + tiny);
    const double denom = a - 2.0 * b + c;
    if (denom < 0.0) offset = std::clamp(0.5 * (a - c) / denom, -0.5, 0.5);
  }
  const double bin = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
  est.omega = (static_cast<double>(peak) + offset) * bin;
  return est;
}

}  // namespace negspin
