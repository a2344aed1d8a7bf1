#include "negspin/clifford.hpp"

#include <Eigen/SVD>

#include <string>

namespace negspin {

namespace {

using cd = std::complex<double>;

ComplexMatrix make2(cd a, cd b, cd c, cd d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

std::string axis(int k) { return std::string(1, "xyz"[k]); }

}  // namespace

const std::array<ComplexMatrix, 3>& pauli() {
  static const std::array<ComplexMatrix, 3> s = {
      make2(0.0, 1.0, 1.0, 0.0),
      make2(0.0, cd(0.0, -1.0), cd(0.0, 1.0), 0.0),
      make2(1.0, 0.0, 0.0, -1.0),
  };
  return s;
}

ComplexMatrix DiracBasis::i_beta_gamma5() const { return cd(0.0, 1.0) * beta * gamma5; }

ComplexMatrix DiracBasis::alpha_dot(const Eigen::Vector3d& n) const {
  return n.x() * alpha[0] + n.y() * alpha[1] + n.z() * alpha[2];
}

ComplexMatrix DiracBasis::spin(int k) const {
  return kron(ComplexMatrix::Identity(2, 2), pauli().at(static_cast<std::size_t>(k)));
}

DiracBasis dirac_representation() {
  const auto& s = pauli();
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
  const cd i(0.0, 1.0);

  DiracBasis b;
  b.beta = kron(s[2], id2);
  for (int k = 0; k < 3; ++k) b.alpha[k] = kron(s[0], s[k]);
  b.gamma[0] = b.beta;
  for (int k = 0; k < 3; ++k) b.gamma[k + 1] = -i * b.beta * b.alpha[k];
  b.gamma5 = b.gamma[1] * b.gamma[2] * b.gamma[3] * b.gamma[0];
  b.gamma1_proj = id4 - i * b.beta * b.gamma5;
  b.gamma2_op = (id4 + i * b.gamma5) * b.beta;
  return b;
}

CheckReport verify_clifford_identities(const DiracBasis& basis) {
  CheckReport report;
  const ComplexMatrix id4 = identity(4);
  const ComplexMatrix zero = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const ComplexMatrix expected = i == j ? ComplexMatrix(2.0 * id4) : zero;
      report.add("{alpha_" + axis(i) + ",alpha_" + axis(j) + "}=2delta",
                 residual_norm(anticommutator(basis.alpha[i], basis.alpha[j]), expected),
                 kIdentityTolerance);
    }
  }
  for (int j = 0; j < 3; ++j) {
    report.add("{beta,alpha_" + axis(j) + "}=0",
               residual_norm(anticommutator(basis.beta, basis.alpha[j]), zero),
               kIdentityTolerance);
  }
  report.add("beta^2=I", residual_norm(mat_mul(basis.beta, basis.beta), id4), kIdentityTolerance);
  return report;
}

double smallest_singular_value(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().minCoeff();
}

CheckReport verify_gamma_properties(const DiracBasis& basis) {
  CheckReport report;
  const ComplexMatrix id4 = identity(4);
  const ComplexMatrix zero = ComplexMatrix::Zero(4, 4);
  const cd i(0.0, 1.0);
  const ComplexMatrix& g1 = basis.gamma1_proj;
  const ComplexMatrix& g2 = basis.gamma2_op;
  const ComplexMatrix& beta = basis.beta;
  const ComplexMatrix& g5 = basis.gamma5;
  const double tol = kIdentityTolerance;

  report.add("Gamma1^2=2Gamma1", residual_norm(mat_mul(g1, g1), 2.0 * g1), tol);
  report.add("Gamma2^2=2I", residual_norm(mat_mul(g2, g2), 2.0 * id4), tol);
  report.add("Gamma2*Gamma1=(I+beta)(I-i*gamma5)",
             residual_norm(mat_mul(g2, g1), mat_mul(ComplexMatrix(id4 + beta),
                                                    ComplexMatrix(id4 - i * g5))),
             tol);
  for (int k = 0; k < 3; ++k) {
    report.add("{alpha_" + axis(k) + ",Gamma2}=0",
               residual_norm(anticommutator(basis.alpha[k], g2), zero), tol);
  }
  report.add("(I+i*gamma5)(I-i*gamma5)/2=I",
             residual_norm(mat_mul(ComplexMatrix(id4 + i * g5), ComplexMatrix(id4 - i * g5)) / 2.0,
                           id4),
             tol);
  report.add("Gamma2*beta=I+i*gamma5", residual_norm(mat_mul(g2, beta), id4 + i * g5), tol);
  report.add("(I+beta)*beta=I+beta", residual_norm(mat_mul(ComplexMatrix(id4 + beta), beta),
                                                   id4 + beta),
             tol);

  report.add("Gamma1 Hermitian", hermiticity_residual(g1), tol);
  report.add("Gamma2 Hermitian", hermiticity_residual(g2), tol);
  report.add("Gamma2^dag*Gamma2/2=I", residual_norm(mat_mul(adjoint(g2), g2) / 2.0, id4), tol);
  for (int mu = 0; mu < 4; ++mu) {
    report.add("gamma_" + std::to_string(mu) + " Hermitian", hermiticity_residual(basis.gamma[mu]),
               tol);
  }
  report.add("gamma5 Hermitian", hermiticity_residual(g5), tol);
  report.add("i*beta*gamma5 Hermitian", hermiticity_residual(basis.i_beta_gamma5()), tol);
  report.add("{gamma5,beta}=0", residual_norm(anticommutator(g5, beta), zero), tol);
  for (int k = 0; k < 3; ++k) {
    report.add("[gamma5,alpha_" + axis(k) + "]=0",
               residual_norm(commutator(g5, basis.alpha[k]), zero), tol);
  }
  report.add("Gamma1 singular", smallest_singular_value(g1), tol);
  return report;
}

}  // namespace negspin
