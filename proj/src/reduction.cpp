#include <algorithm>
#include <cmath>

#include "negspin/clifford.hpp"
#include "negspin/fields.hpp"
#include "negspin/spectral.hpp"

namespace negspin {

namespace {

using cd = std::complex<double>;

const DiracBasis& basis() {
  static const DiracBasis b = dirac_representation();
  return b;
}

ComplexMatrix sigma_dot(const MomentumVector& p) {
  const auto& s = pauli();
  return p.x() * s[0] + p.y() * s[1] + p.z() * s[2];
}

// eps (I + beta) + c alpha.p - m0 c^2 Gamma2, i.e. the rotated equation with
// everything moved to the left.
ComplexMatrix rotated_operator(double eps, const MomentumVector& p, const PhysicalParams& params) {
  const auto& b = basis();
  return eps * (identity(4) + b.beta) + params.c * b.alpha_dot(p) -
         params.rest_energy() * b.gamma2_op;
}

double worst_column_norm(const ComplexMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) worst = std::max(worst, m.col(j).norm());
  return worst;
}

}  // namespace

Spinor2 eliminate_lower_spinor(const MomentumVector& p, const Spinor2& phi,
                               const PhysicalParams& params) {
  const double rest = params.rest_energy();
  const ComplexMatrix op = cd(0.0, rest) * identity(2) + params.c * sigma_dot(p);
  return -(op * phi) / rest;
}

CheckReport pauli_reduction_check(const MomentumVector& p, double v0, double e_trial,
                                  const PhysicalParams& params, const Spinor2& phi_in) {
  params.validate();
  if (!(phi_in.norm() > 0.0)) throw InvalidInput("pauli_reduction_check: phi must be nonzero");
  const auto& b = basis();
  const double rest = params.rest_energy();
  const double kinetic = p.squaredNorm() / (2.0 * params.m0);
  const ComplexMatrix id4 = identity(4);
  const ComplexMatrix ap = b.alpha_dot(p);
  const ComplexMatrix rhs60 = params.c * ap + rest * b.gamma2_op;

  CheckReport report;

  // Free-particle eigenvectors in the linear-in-E form.
  ComplexMatrix h = nonrelativistic_hamiltonian(p, params);
  h.diagonal().array() += v0;
  const auto eig = hermitian_eig(h);
  const ComplexMatrix negative = eig.eigenvectors.leftCols(2);
  const ComplexMatrix positive = eig.eigenvectors.rightCols(2);
  double res_plus = 0.0;
  double res_minus = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double e_plus = eig.eigenvalues(2 + k) - v0;
    const double e_minus = eig.eigenvalues(k) - v0;
    res_plus = std::max(res_plus, ((e_plus * b.gamma1_proj - rhs60) * positive.col(k)).norm());
    res_minus = std::max(
        res_minus, ((e_minus * (id4 + b.i_beta_gamma5()) - rhs60) * negative.col(k)).norm());
  }
  report.add("linear form, positive branch", res_plus, kReductionIdentityTolerance);
  report.add("linear form, negative branch", res_minus, kReductionIdentityTolerance);

  // Gamma2 (E Gamma1 - rhs) Gamma2 / 2 == E (I + beta) + c alpha.p - m0 c^2 Gamma2.
  const double e_shift = e_trial - v0;
  const ComplexMatrix conjugated =
      b.gamma2_op * (e_shift * b.gamma1_proj - rhs60) * b.gamma2_op / 2.0;
  report.add("Gamma2 rotation", residual_norm(conjugated, rotated_operator(e_shift, p, params)),
             kReductionIdentityTolerance);

  // Positive-branch eigenvectors, rotated, obey the rotated equation and
  // already have the eliminated lower spinor.
  const ComplexMatrix rotated = b.gamma2_op * positive;
  const ComplexMatrix rot_op = rotated_operator(eig.eigenvalues(3) - v0, p, params);
  report.add("rotated eigenvectors", worst_column_norm(rot_op * rotated),
             kReductionIdentityTolerance);
  double lower_mismatch = 0.0;
  for (Eigen::Index k = 0; k < rotated.cols(); ++k) {
    const Spinor2 upper = rotated.col(k).head<2>();
    const Spinor2 lower = rotated.col(k).tail<2>();
    lower_mismatch =
        std::max(lower_mismatch, (lower - eliminate_lower_spinor(p, upper, params)).norm());
  }
  report.add("eigenvector lower spinor", lower_mismatch, kReductionIdentityTolerance);

  // Elimination for an arbitrary upper spinor.
  const Spinor2 phi = phi_in.normalized();
  const double eps = std::abs(e_shift);
  Spinor4 psi;
  psi << phi, eliminate_lower_spinor(p, phi, params);
  const Spinor4 applied = rotated_operator(eps, p, params) * psi;
  const Spinor2 pauli_term = (eps - rest - kinetic) * phi;
  report.add("lower rows vanish", applied.tail<2>().norm(), kReductionIdentityTolerance);
  report.add("upper rows = 2 x Pauli operator", (applied.head<2>() - 2.0 * pauli_term).norm(),
             kReductionIdentityTolerance);
  report.add("pauli relation", applied.head<2>().norm() / 2.0, kPauliRelationTolerance);
  return report;
}

CheckReport pauli_reduction_check(const MomentumVector& p, double v0, double e_trial,
                                  const PhysicalParams& params) {
  const Spinor2 phi(std::complex<double>(1.0, 0.0), std::complex<double>(0.0, 1.0));
  return pauli_reduction_check(p, v0, e_trial, params, phi);
}

}  // namespace negspin
