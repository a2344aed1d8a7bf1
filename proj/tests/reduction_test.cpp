#include <gtest/gtest.h>

#include <random>

#include "negspin/clifford.hpp"
#include "negspin/fields.hpp"
#include "negspin/spectral.hpp"

namespace negspin {
namespace {

using cd = std::complex<double>;
const PhysicalParams natural{};

TEST(PauliReduction, UnitMomentumAtEigenvalue) {
  const auto r = pauli_reduction_check({0, 0, 1}, 0.0, 1.5, natural);
  EXPECT_TRUE(r.overall_pass());
  for (const auto& e : r.entries()) EXPECT_LT(e.residual, e.tolerance) << e.name;
}

TEST(PauliReduction, RestFrameEliminationGivesMinusIPhi) {
  const Spinor2 phi(cd(0.6, 0.0), cd(0.0, 0.8));
  const Spinor2 chi = eliminate_lower_spinor({0, 0, 0}, phi, natural);
  EXPECT_LT((chi + cd(0, 1) * phi).norm(), 1e-16);
  const auto r = pauli_reduction_check({0, 0, 0}, 0.0, 1.0, natural, phi);
  EXPECT_TRUE(r.overall_pass());
  EXPECT_EQ(r.find("lower rows vanish")->residual, 0.0);
}

TEST(PauliReduction, WrongTrialEnergyIsDetected) {
  const auto r = pauli_reduction_check({0, 0, 1}, 0.0, 1.7, natural);
  EXPECT_FALSE(r.overall_pass());
  const auto* pauli = r.find("pauli relation");
  ASSERT_NE(pauli, nullptr);
  EXPECT_FALSE(pauli->pass);
  EXPECT_NEAR(pauli->residual, 0.2, 1e-12);
  // Everything that is an identity still holds.
  for (const auto& e : r.entries()) {
    if (e.name != "pauli relation") EXPECT_TRUE(e.pass) << e.name;
  }
}

TEST(PauliReduction, NegativeBranchTrialIsMirrored) {
  const auto r = pauli_reduction_check({0.3, 0, 0.4}, 0.2, 0.2 - (1.0 + 0.125), natural);
  EXPECT_TRUE(r.overall_pass());
}

TEST(PauliReduction, LiteralLinearFormHoldsOnlyOnPositiveBranch) {
  // Negative-energy eigenvectors fail E Gamma1 Phi = (c alpha.p + m0c^2 Gamma2) Phi;
  // the library checks them against the I + i beta gamma5 form instead.
  const auto b = dirac_representation();
  const MomentumVector p(0.2, -0.4, 0.5);
  const auto s = helicity_eigenstates(p, natural, HamiltonianKind::nonrelativistic);
  const ComplexMatrix rhs = b.alpha_dot(p) + b.gamma2_op;
  for (const auto& st : s.states) {
    const double res = ((st.energy * b.gamma1_proj - rhs) * st.spinor).norm();
    if (st.branch > 0) {
      EXPECT_LT(res, 1e-12);
    } else {
      EXPECT_GT(res, 1.0);
    }
  }
}

TEST(PauliReduction, RandomDrawsKeepIdentitiesExact) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const MomentumVector p(u(rng), u(rng), u(rng));
    const double v0 = 0.5 * u(rng);
    const Spinor2 phi(cd(u(rng), u(rng)), cd(u(rng), u(rng)));
    const double e = v0 + 1.0 + p.squaredNorm() / 2.0;
    const auto r = pauli_reduction_check(p, v0, e, natural, phi);
    EXPECT_TRUE(r.overall_pass()) << "trial " << trial;
    EXPECT_LT(r.find("Gamma2 rotation")->residual, 1e-12);
    EXPECT_LT(r.find("lower rows vanish")->residual, 1e-12);
  }
}

TEST(PauliReduction, CustomUnits) {
  PhysicalParams pp{1.7, 1.3, 0.8, -1.0};
  const MomentumVector p(0.4, 0.1, -0.9);
  const double e = pp.rest_energy() + p.squaredNorm() / (2 * pp.m0);
  EXPECT_TRUE(pauli_reduction_check(p, 0.0, e, pp).overall_pass());
}

TEST(PauliReduction, RejectsZeroSpinor) {
  EXPECT_THROW(pauli_reduction_check({0, 0, 1}, 0.0, 1.5, natural, Spinor2::Zero()), InvalidInput);
}

}  // namespace
}  // namespace negspin
