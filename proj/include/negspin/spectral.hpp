#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "negspin/check_report.hpp"
#include "negspin/clifford.hpp"
#include "negspin/matrix.hpp"
#include "negspin/params.hpp"

namespace negspin {

// Which free Hamiltonian to use.
//   dirac:           c alpha.p + m0 c^2 beta
//   nonrelativistic: c alpha.p + m0 c^2 beta + i beta gamma5 (alpha.p)^2 / (2 m0)
enum class HamiltonianKind { dirac, nonrelativistic };

std::string_view to_string(HamiltonianKind kind);

ComplexMatrix dirac_hamiltonian(const MomentumVector& p, const PhysicalParams& params);
ComplexMatrix nonrelativistic_hamiltonian(const MomentumVector& p, const PhysicalParams& params);
ComplexMatrix free_hamiltonian(const MomentumVector& p, const PhysicalParams& params,
                               HamiltonianKind kind);

// Magnitude of the (doubly degenerate) positive eigenvalue, in closed form:
// sqrt(c^2 p^2 + m0^2 c^4) for Dirac, m0 c^2 + p^2 / (2 m0) otherwise.
double closed_form_energy(const MomentumVector& p, const PhysicalParams& params,
                          HamiltonianKind kind);

struct EigenSolution {
  Eigen::VectorXd energies;   // ascending
  ComplexMatrix eigenvectors; // columns, orthonormal
  std::vector<int> branch;    // sign of each energy
};

EigenSolution free_spectrum(const MomentumVector& p, const PhysicalParams& params,
                            HamiltonianKind kind);

struct LabeledState {
  double energy = 0.0;
  int branch = 0;    // +1 / -1
  int helicity = 0;  // +1 / -1 (spin-z when momentum vanishes)
  Spinor4 spinor = Spinor4::Zero();
};

/// Four simultaneous eigenstates of H and of the helicity operator, ordered
/// (branch -, h -1), (branch -, h +1), (branch +, h -1), (branch +, h +1).
struct LabeledEigenstates {
  std::array<LabeledState, 4> states;
  bool spin_z_fallback = false;  // true when |p| == 0

  const LabeledState& at(int branch, int helicity) const;
};

// Helicity is resolved inside each degenerate energy eigenspace. Each spinor
// carries a fixed phase: its largest component is real and positive.
LabeledEigenstates helicity_eigenstates(const MomentumVector& p, const PhysicalParams& params,
                                        HamiltonianKind kind);

struct ExpectationReport {
  int branch = 0;
  int helicity = 0;
  Eigen::Vector3d mean_alpha = Eigen::Vector3d::Zero();
  double mean_beta = 0.0;
  double mean_ibg5 = 0.0;
  double energy = 0.0;
};

ExpectationReport expectation_report(const MomentumVector& p, const PhysicalParams& params,
                                     HamiltonianKind kind, int branch, int helicity);

// <psi| op |psi> for a normalized spinor; the imaginary part is dropped.
double expectation(const ComplexMatrix& op, const Spinor4& psi);

struct EnergyMomentum {
  double energy = 0.0;
  MomentumVector momentum = MomentumVector::Zero();
};

/// Maps (E', p') measured in a frame moving with velocity v to the lab frame:
///
///   p = p' + (gamma - 1) v (p'.v) / v^2 + gamma v E' / c^2
///   E = v.p + E' / gamma
///
/// Negative E' is allowed. Throws InvalidInput when |v| >= c.
EnergyMomentum lorentz_transform(double e_prime, const MomentumVector& p_prime,
                                 const Eigen::Vector3d& v, const PhysicalParams& params);

inline constexpr double kCorrespondenceTolerance = 1e-10;

/// Dirac eigenstates of the given branch: with v = <c alpha> and
/// 1/gamma = <beta>, checks E_D = v.p + m0 c^2 / gamma (relative residual,
/// worst of the two helicity states).
CheckReport correspondence_check(const MomentumVector& p, const PhysicalParams& params,
                                 int branch);

}  // namespace negspin
