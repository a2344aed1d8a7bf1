#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "negspin/matrix.hpp"
#include "negspin/params.hpp"
#include "negspin/spectral.hpp"

namespace negspin {

struct SuperpositionComponent {
  std::complex<double> coefficient;
  double energy = 0.0;
  Spinor4 spinor = Spinor4::Zero();
};

// A superposition of eigenstates of one Hamiltonian at a single momentum.
struct Superposition {
  std::vector<SuperpositionComponent> components;
  MomentumVector momentum = MomentumVector::Zero();

  // sum |c_i|^2 |psi_i|^2
  double weight() const;
};

/// Builds a normalized superposition of the four labeled eigenstates at p,
/// ordered as in LabeledEigenstates. Amplitudes are rescaled so the weights
/// sum to one; zero amplitudes are dropped.
Superposition make_superposition(const MomentumVector& p, const PhysicalParams& params,
                                 HamiltonianKind kind, const std::array<std::complex<double>, 4>& amplitudes);

// Checks normalization (< 1e-12) and the eigen-residual of each component
// against the given Hamiltonian (< 1e-9); throws InvalidInput otherwise.
void validate_superposition(const Superposition& sup, const ComplexMatrix& hamiltonian);

// Phi(t) = sum c_i psi_i exp(-i E_i t / hbar)
Spinor4 evolve(const Superposition& sup, double t, const PhysicalParams& params);

struct TrajectorySample {
  double t = 0.0;
  double value = 0.0;
};

inline constexpr std::size_t kMinSeriesSamples = 16;

/// <Phi(t)| O |Phi(t)> at n_samples uniform times t_i = i t_max / (n_samples - 1).
/// Throws InvalidInput for a non-Hermitian observable, n_samples < 16 or
/// t_max <= 0.
std::vector<TrajectorySample> observable_series(const Superposition& sup,
                                                const ComplexMatrix& observable, double t_max,
                                                std::size_t n_samples,
                                                const PhysicalParams& params);

inline constexpr std::size_t kMinFrequencySamples = 64;
inline constexpr double kDetectionRatio = 10.0;

struct FrequencyEstimate {
  std::optional<double> omega;  // angular frequency; empty means no oscillation
  double peak = 0.0;            // windowed spectral magnitude of the peak bin
  double noise_floor = 0.0;     // median windowed magnitude over nonzero bins
};

/// Strongest nonzero-frequency Fourier component of a uniformly sampled
/// series. The mean is removed and a Hann window applied; the peak bin is
/// refined by a parabola through the log magnitudes of it and its neighbours.
/// A peak counts only if it exceeds 10x the median magnitude and is not at
/// round-off level relative to the series scale.
FrequencyEstimate dominant_frequency(const std::vector<TrajectorySample>& series);

}  // namespace negspin
