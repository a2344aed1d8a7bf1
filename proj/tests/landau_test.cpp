#include <gtest/gtest.h>

#include <random>

#include "negspin/fields.hpp"
#include "oracles.hpp"

namespace negspin {
namespace {

const PhysicalParams natural{};

// (sigma.Pi)^2 = Pi_perp^2 + pz^2 - (q hbar b / c) sigma_z, with
// Pi_perp^2 = (hbar |q| b / c)(2N + 1). Diagonal on |spin> x |n>.
ComplexMatrix ladder_kinetic_square(double b, double pz, std::size_t n_max, const PhysicalParams& pp) {
  const auto dim = static_cast<Eigen::Index>(n_max + 1);
  ComplexMatrix k = ComplexMatrix::Zero(2 * dim, 2 * dim);
  const double unit = pp.hbar * std::abs(pp.q) * b / pp.c;
  for (int s = 0; s < 2; ++s) {
    const double sz = s == 0 ? 1.0 : -1.0;
    for (Eigen::Index n = 0; n < dim; ++n) {
      k(s * dim + n, s * dim + n) =
          unit * (2.0 * double(n) + 1.0) + pz * pz - pp.q * pp.hbar * b / pp.c * sz;
    }
  }
  return k;
}

TEST(LandauAnalytic, SpecValues) {
  EXPECT_NEAR(landau_levels_analytic({1.0}, 0.0, 0, natural).levels[0].energy_plus, 1.0, 1e-15);
  EXPECT_NEAR(landau_levels_analytic({2.0}, 0.0, 1, natural).levels[1].energy_plus, 3.0, 1e-15);
  EXPECT_NEAR(landau_levels_analytic({1.0}, 1.0, 0, natural).levels[0].energy_plus, 1.5, 1e-15);
  const auto s = landau_levels_analytic({1.0}, 0.0, 3, natural);
  EXPECT_EQ(s.levels[0].multiplicity, 1u);
  EXPECT_EQ(s.levels[3].multiplicity, 2u);
  EXPECT_DOUBLE_EQ(s.levels[2].energy_minus, -s.levels[2].energy_plus);
  EXPECT_DOUBLE_EQ(s.omega_c, 1.0);
}

TEST(LandauAnalytic, MatchesLadderAlgebra) {
  // Eigenvalues of m0c^2 + (sigma.Pi)^2/2m0 from the ladder form reproduce
  // the closed form with its multiplicities, for either charge sign.
  for (double q : {-1.0, 1.0, -2.5}) {
    PhysicalParams pp;
    pp.q = q;
    pp.m0 = 1.3;
    const double b = 0.7;
    const double pz = 0.4;
    const ComplexMatrix k = ladder_kinetic_square(b, pz, 20, pp);
    std::vector<double> w;
    for (Eigen::Index i = 0; i < k.rows(); ++i) w.push_back(pp.rest_energy() + k(i, i).real() / (2 * pp.m0));
    std::sort(w.begin(), w.end());
    const auto s = landau_levels_analytic({b}, pz, 10, pp);
    std::size_t cursor = 0;
    for (const auto& level : s.levels) {
      for (std::size_t m = 0; m < level.multiplicity; ++m) EXPECT_NEAR(w[cursor++], level.energy_plus, 1e-12);
    }
  }
}

TEST(LandauMatrix, KineticSquareMatchesLadderAlgebra) {
  for (double q : {-1.0, 1.0}) {
    PhysicalParams pp;
    pp.q = q;
    const std::size_t n_max = 12;
    const ComplexMatrix built = landau_kinetic_square({1.7}, 0.3, n_max, pp);
    const ComplexMatrix expected = kron(identity(2), ladder_kinetic_square(1.7, 0.3, n_max, pp));
    EXPECT_LT(residual_norm(built, expected), 1e-12) << "q=" << q;
  }
}

TEST(LandauMatrix, Hermitian) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n_max = 8 + static_cast<std::size_t>(i) * 3;
    EXPECT_LT(hermiticity_residual(landau_hamiltonian_matrix({u(rng)}, u(rng) - 1.5, n_max, natural)), 1e-12);
  }
}

TEST(LandauMatrix, RejectsCoarseTruncationAndBadField) {
  EXPECT_THROW(landau_hamiltonian_matrix({1.0}, 0.0, 7, natural), InvalidInput);
  EXPECT_THROW(landau_hamiltonian_matrix({0.0}, 0.0, 20, natural), InvalidInput);
  EXPECT_THROW(landau_hamiltonian_matrix({-1.0}, 0.0, 20, natural), InvalidInput);
  PhysicalParams neutral;
  neutral.q = 0.0;
  EXPECT_THROW(landau_hamiltonian_matrix({1.0}, 0.0, 20, neutral), InvalidInput);
}

TEST(LandauMatrix, GroundLevelAtUnitField) {
  const auto w = oracle::hermitian_eigenvalues(landau_hamiltonian_matrix({1.0}, 0.0, 40, natural));
  bool found_plus = false;
  bool found_minus = false;
  for (double e : w) {
    found_plus = found_plus || std::abs(e - 1.0) < 1e-8;
    found_minus = found_minus || std::abs(e + 1.0) < 1e-8;
  }
  EXPECT_TRUE(found_plus);
  EXPECT_TRUE(found_minus);
}

TEST(LandauMatrix, AgreesWithAnalyticLevels) {
  for (double b : {1.0, 2.0}) {
    for (double pz : {0.0, 1.0}) {
      const auto cmp = compare_landau_levels({b}, pz, 40, 3, natural);
      ASSERT_EQ(cmp.levels.size(), 4u);
      for (const auto& l : cmp.levels) EXPECT_LT(l.residual, 1e-8) << "b=" << b << " k=" << l.k;
      EXPECT_LT(cmp.pairing_residual, 1e-8);
    }
  }
  const auto cmp = compare_landau_levels({2.0}, 0.0, 40, 3, natural);
  EXPECT_NEAR(cmp.levels[1].numeric_plus - cmp.levels[0].numeric_plus, 2.0, 1e-8);
  EXPECT_NEAR(cmp.levels[3].numeric_plus - cmp.levels[2].numeric_plus, 2.0, 1e-8);
}

TEST(LandauMatrix, WeakFieldApproachesFreeParticle) {
  const double b = 1e-3;
  const double pz = 0.5;
  const auto cmp = compare_landau_levels({b}, pz, 20, 0, natural);
  const double free_energy = 1.0 + pz * pz / 2.0;
  EXPECT_LT(std::abs(cmp.levels[0].numeric_plus - free_energy), 0.5 * b);
}

TEST(LandauMatrix, ConvergedUnderTruncationGrowth) {
  const auto a = compare_landau_levels({1.0}, 0.5, 40, 2, natural);
  const auto c = compare_landau_levels({1.0}, 0.5, 60, 2, natural);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_LT(std::abs(a.levels[k].numeric_plus - c.levels[k].numeric_plus), 1e-6);
  }
}

TEST(LandauMatrix, RequiresRoomForRequestedLevels) {
  EXPECT_THROW(compare_landau_levels({1.0}, 0.0, 10, 9, natural), InvalidInput);
}

TEST(SquareIdentity, InteriorPassesAndEdgeBookkeeping) {
  const auto r = square_identity_check({1.0}, 0.0, 30, natural);
  EXPECT_TRUE(r.report.overall_pass());
  EXPECT_EQ(r.report.size(), 2u);
  EXPECT_EQ(r.excluded_states, 8u);
  for (const auto& e : r.report.entries()) EXPECT_LT(e.residual, 1e-10) << e.name;
}

TEST(SquareIdentity, EdgeRowsReallyDeviate) {
  // The top level misses its n_max + 1 partner, so the identity cannot hold there.
  const std::size_t n_max = 12;
  const ComplexMatrix h = landau_hamiltonian_matrix({1.0}, 0.0, n_max, natural);
  ComplexMatrix s = landau_kinetic_square({1.0}, 0.0, n_max, natural) / 2.0;
  s.diagonal().array() += 1.0;
  const ComplexMatrix diff = h * h - s * s;
  EXPECT_GT(diff.cwiseAbs().maxCoeff(), 1.0);
}

TEST(MinimalCoupling, ZeroPotentialIsLandauMatrix) {
  EXPECT_EQ(residual_norm(minimal_coupling_hamiltonian(0.0, {1.0}, 0.2, 20, natural),
                          landau_hamiltonian_matrix({1.0}, 0.2, 20, natural)),
            0.0);
}

TEST(MinimalCoupling, ConstantPotentialShiftsLevels) {
  const ComplexMatrix h = minimal_coupling_hamiltonian(0.3, {1.0}, 0.0, 40, natural);
  EXPECT_LT(hermiticity_residual(h), 1e-12);
  const auto w = oracle::hermitian_eigenvalues(h);
  std::vector<double> positive;
  for (double e : w) {
    if (e > 0.3) positive.push_back(e);
  }
  // 1.3 once, then 2.3, 3.3 twice each.
  EXPECT_NEAR(positive[0], 1.3, 1e-8);
  EXPECT_NEAR(positive[1], 2.3, 1e-8);
  EXPECT_NEAR(positive[2], 2.3, 1e-8);
  EXPECT_NEAR(positive[3], 3.3, 1e-8);
  const auto cmp = compare_landau_levels({1.0}, 0.0, 40, 3, natural, 0.3);
  for (const auto& l : cmp.levels) EXPECT_LT(l.residual, 1e-8);
}

}  // namespace
}  // namespace negspin
