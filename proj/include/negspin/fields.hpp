#pragma once

#include <cstddef>
#include <vector>

#include "negspin/check_report.hpp"
#include "negspin/matrix.hpp"
#include "negspin/params.hpp"

namespace negspin {

// ---------------------------------------------------------------------------
// Uniform magnetic field along +z (Landau problem)
// ---------------------------------------------------------------------------

struct UniformBField {
  double b = 1.0;  // > 0
};

inline constexpr std::size_t kMinLandauLevels = 8;

/// The minimally coupled Hamiltonian
///
///   H = c alpha.Pi + m0 c^2 beta + i beta gamma5 (alpha.Pi)^2 / (2 m0)
///
/// on a truncated basis of cyclotron-oscillator levels n = 0..n_max tensored
/// with the 4 bispinor components. Basis index = 4x4-index * (n_max + 1) + n.
/// Pi_x, Pi_y come from ladder operators with [Pi_x, Pi_y] = i hbar q b / c,
/// and Pi_z = pz. (alpha.Pi)^2 is formed from products Pi_i Pi_j evaluated on
/// a basis padded by one level, so every retained matrix element is exact.
///
/// Throws InvalidInput if n_max < 8, b <= 0 or q == 0.
ComplexMatrix landau_hamiltonian_matrix(const UniformBField& field, double pz, std::size_t n_max,
                                        const PhysicalParams& params);

// (alpha.Pi)^2 on the same basis as landau_hamiltonian_matrix.
ComplexMatrix landau_kinetic_square(const UniformBField& field, double pz, std::size_t n_max,
                                    const PhysicalParams& params);

// Landau matrix plus a constant scalar potential energy v0.
ComplexMatrix minimal_coupling_hamiltonian(double v0, const UniformBField& field, double pz,
                                           std::size_t n_max, const PhysicalParams& params);

double cyclotron_frequency(const UniformBField& field, const PhysicalParams& params);

struct LandauLevel {
  std::size_t k = 0;
  double energy_plus = 0.0;
  double energy_minus = 0.0;
  std::size_t multiplicity = 0;
};

struct LandauSpectrum {
  double omega_c = 0.0;
  double pz = 0.0;
  std::vector<LandauLevel> levels;
};

// E+(k) = m0 c^2 + hbar omega_c k + pz^2 / (2 m0), E- = -E+;
// multiplicity 1 for k = 0 and 2 otherwise.
LandauSpectrum landau_levels_analytic(const UniformBField& field, double pz, std::size_t k_max,
                                      const PhysicalParams& params);

struct LandauLevelComparison {
  std::size_t k = 0;
  std::size_t multiplicity = 0;
  double analytic_plus = 0.0;
  double numeric_plus = 0.0;   // mean over the multiplicity
  double numeric_minus = 0.0;  // mean over the multiplicity
  double residual = 0.0;       // worst |numeric - analytic| over both branches
};

struct LandauComparison {
  std::vector<LandauLevelComparison> levels;
  double pairing_residual = 0.0;  // max |E_i + E_(N-1-i)| over the sorted spectrum
};

/// Diagonalizes the truncated matrix (shifted by v0) and matches its lowest
/// |E| eigenvalues on each branch against the closed form, level by level.
/// Requires k_max + 2 <= n_max.
LandauComparison compare_landau_levels(const UniformBField& field, double pz, std::size_t n_max,
                                       std::size_t k_max, const PhysicalParams& params,
                                       double v0 = 0.0);

struct SquareIdentityResult {
  CheckReport report;
  std::size_t excluded_states = 0;
};

inline constexpr double kSquareIdentityTolerance = 1e-10;

/// H^2 = S^2 and [H, S] = 0 with S = m0 c^2 + (alpha.Pi)^2 / (2 m0), measured on
/// rows whose oscillator level is at most n_max - 2.
SquareIdentityResult square_identity_check(const UniformBField& field, double pz,
                                           std::size_t n_max, const PhysicalParams& params);

// ---------------------------------------------------------------------------
// Central Coulomb potential, radial finite differences
// ---------------------------------------------------------------------------

struct RadialGrid {
  double r_max = 60.0;
  std::size_t n_points = 6000;

  double spacing() const { return r_max / static_cast<double>(n_points + 1); }
  double node(std::size_t i) const { return static_cast<double>(i) * spacing(); }  // i = 1..n

  // Same r_max, spacing halved.
  RadialGrid refined() const { return {r_max, 2 * n_points + 1}; }

  void validate() const;
};

inline constexpr std::size_t kMinRadialPoints = 50;
inline constexpr double kMaxSpacingTimesCharge = 0.05;

struct CoulombSpectrum {
  double z = 0.0;
  std::size_t l = 0;
  std::vector<double> energies_plus;   // ascending
  std::vector<double> energies_minus;  // -energies_plus
};

struct RadialTridiagonal {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd off_diagonal;  // size n - 1
};

// m0 c^2 - hbar^2/(2 m0) (d^2/dr^2 - l(l+1)/r^2) - Z q^2 / r on the grid nodes,
// 3-point Laplacian with u(0) = u(r_max) = 0.
RadialTridiagonal radial_hamiltonian(double z, std::size_t l, const RadialGrid& grid,
                                     const PhysicalParams& params);

/// Lowest `count` eigenvalues of a symmetric tridiagonal matrix, ascending,
/// by Sturm-sequence bisection.
std::vector<double> tridiagonal_lowest_eigenvalues(const Eigen::VectorXd& diagonal,
                                                   const Eigen::VectorXd& off_diagonal,
                                                   std::size_t count);

/// Lowest n_levels bound-state energies for u = r R(r), with the negative
/// branch mirrored. Throws InvalidInput (naming a sufficient n_points) when
/// spacing * z >= 0.05.
CoulombSpectrum coulomb_radial_spectrum(double z, std::size_t l, const RadialGrid& grid,
                                        const PhysicalParams& params, std::size_t n_levels);

// m0 c^2 - m0 (Z q^2)^2 / (2 hbar^2 n^2)
double bohr_energy(double z, std::size_t n, const PhysicalParams& params);

struct GridConvergence {
  double energy_h = 0.0;
  double energy_h2 = 0.0;
  double energy_h4 = 0.0;
  double extrapolated = 0.0;  // Richardson from h/2 and h/4
  double ratio = 0.0;         // (E_h - E*) / (E_h2 - E*)
};

GridConvergence coulomb_convergence(double z, std::size_t l, const RadialGrid& grid,
                                    const PhysicalParams& params, std::size_t level_index);

// ---------------------------------------------------------------------------
// Reduction to the two-component equation (momentum representation)
// ---------------------------------------------------------------------------

inline constexpr double kReductionIdentityTolerance = 1e-12;
inline constexpr double kPauliRelationTolerance = 1e-10;

/// Upper spinor -> lower spinor: chi = -(i m0 c^2 + c sigma.p) phi / (m0 c^2).
Spinor2 eliminate_lower_spinor(const MomentumVector& p, const Spinor2& phi,
                               const PhysicalParams& params);

/// Runs the linearized-equation chain for plane waves of momentum p in a
/// constant potential energy v0:
///
///  - eigenvectors of H + v0 satisfy (E - v0) G Phi = (c alpha.p + m0 c^2 Gamma2) Phi
///    with G = Gamma1 on the positive branch and I + i beta gamma5 on the negative;
///  - conjugating by Gamma2 (Psi = Gamma2 Phi) turns that into
///    (E - v0)(I + beta) Psi = (-c alpha.p + m0 c^2 Gamma2) Psi;
///  - for the given upper spinor phi, chi from eliminate_lower_spinor makes the
///    lower two rows vanish and the upper two rows equal
///    2 (eps - m0 c^2 - p^2 / 2 m0) phi, eps = |e_trial - v0|.
///
/// The last entry, "pauli relation", passes only when eps is the kinetic
/// energy plus rest energy; its residual is |eps - m0 c^2 - p^2/2m0| |phi|.
CheckReport pauli_reduction_check(const MomentumVector& p, double v0, double e_trial,
                                  const PhysicalParams& params, const Spinor2& phi);

CheckReport pauli_reduction_check(const MomentumVector& p, double v0, double e_trial,
                                  const PhysicalParams& params);

}  // namespace negspin
