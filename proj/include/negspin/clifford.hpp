#pragma once

#include <array>

#include "negspin/check_report.hpp"
#include "negspin/matrix.hpp"

namespace negspin {

// Pauli matrices; index 0..2 -> x, y, z.
const std::array<ComplexMatrix, 3>& pauli();

/// Dirac matrices in the standard Dirac-Pauli block form.
///
/// `beta = diag(I, -I)`, `alpha[k] = offdiag(sigma_k, sigma_k)`,
/// `gamma[0] = beta`, `gamma[k] = -i beta alpha[k]`, and `gamma5` is the
/// product gamma1 gamma2 gamma3 gamma0. The two derived operators are
///
///   gamma1_proj = I - i beta gamma5      (twice a rank-2 projector)
///   gamma2_op   = (I + i gamma5) beta    (Hermitian, squares to 2I)
struct DiracBasis {
  std::array<ComplexMatrix, 3> alpha;
  ComplexMatrix beta;
  std::array<ComplexMatrix, 4> gamma;
  ComplexMatrix gamma5;
  ComplexMatrix gamma1_proj;
  ComplexMatrix gamma2_op;

  // i beta gamma5, the operator multiplying the kinetic-energy term.
  ComplexMatrix i_beta_gamma5() const;

  // alpha . n for a real 3-vector.
  ComplexMatrix alpha_dot(const Eigen::Vector3d& n) const;

  // Sigma_k = diag(sigma_k, sigma_k), the spin operator on bispinors.
  ComplexMatrix spin(int k) const;
};

DiracBasis dirac_representation();

// Tolerance used for every exact algebraic identity on 4x4 matrices.
inline constexpr double kIdentityTolerance = 1e-14;

/// Anticommutators {alpha_i, alpha_j} for i <= j, {beta, alpha_j}, beta^2.
CheckReport verify_clifford_identities(const DiracBasis& basis);

/// Properties of the two derived operators used to linearize the wave
/// equation, plus Hermiticity of every gamma matrix and singularity of
/// gamma1_proj.
CheckReport verify_gamma_properties(const DiracBasis& basis);

// Smallest singular value of a square matrix.
double smallest_singular_value(const ComplexMatrix& m);

}  // namespace negspin
