#include <gtest/gtest.h>

#include "negspin/fields.hpp"
#include "oracles.hpp"

namespace negspin {
namespace {

const PhysicalParams natural{};

// Dense diagonalization at two resolutions, Richardson-extrapolated.
std::vector<double> extrapolated_levels(double z, int l, double r_max, int n, int count) {
  const auto coarse = oracle::dense_radial_levels(z, l, r_max, n, count);
  const auto fine = oracle::dense_radial_levels(z, l, r_max, 2 * n + 1, count);
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back((4.0 * fine[i] - coarse[i]) / 3.0);
  return out;
}

TEST(RadialGrid, SpacingAndNodes) {
  const RadialGrid g{60.0, 5999};
  EXPECT_DOUBLE_EQ(g.spacing(), 0.01);
  EXPECT_DOUBLE_EQ(g.node(1), 0.01);
  EXPECT_NEAR(g.refined().spacing(), 0.005, 1e-15);
  EXPECT_THROW((RadialGrid{60.0, 49}).validate(), InvalidInput);
}

TEST(Tridiagonal, BisectionMatchesDenseSolver) {
  const RadialGrid g{20.0, 400};
  const auto t = radial_hamiltonian(1.0, 0, g, natural);
  const auto mine = tridiagonal_lowest_eigenvalues(t.diagonal, t.off_diagonal, 5);
  const auto dense = oracle::dense_radial_levels(1.0, 0, 20.0, 400, 5);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(mine[i], dense[i], 1e-10);
}

TEST(Tridiagonal, KnownSpectrumOfDiscreteLaplacian) {
  // tridiag(-1, 2, -1) of size n has eigenvalues 2 - 2 cos(k pi / (n + 1)).
  const int n = 30;
  const auto w = tridiagonal_lowest_eigenvalues(Eigen::VectorXd::Constant(n, 2.0),
                                                Eigen::VectorXd::Constant(n - 1, -1.0), 4);
  for (int k = 1; k <= 4; ++k) EXPECT_NEAR(w[k - 1], 2.0 - 2.0 * std::cos(k * M_PI / (n + 1)), 1e-13);
}

TEST(CoulombSpectrum, HydrogenSWaves) {
  const auto s = coulomb_radial_spectrum(1.0, 0, {60.0, 6000}, natural, 3);
  const auto ref = extrapolated_levels(1.0, 0, 60.0, 1500, 3);
  EXPECT_NEAR(ref[0], 0.5, 1e-4);  // oracle sanity vs Bohr
  EXPECT_NEAR(s.energies_plus[0], 0.5, 5e-4);
  EXPECT_NEAR(s.energies_plus[1], 0.875, 5e-4);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(s.energies_plus[i], ref[i], 5e-5);
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(s.energies_minus[i], -s.energies_plus[i]);
}

TEST(CoulombSpectrum, HeliumLikeCharge) {
  const auto s = coulomb_radial_spectrum(2.0, 0, {60.0, 6000}, natural, 1);
  EXPECT_NEAR(s.energies_plus[0], -1.0, 2e-3);
}

TEST(CoulombSpectrum, PWaveStartsAtSecondShell) {
  const auto s = coulomb_radial_spectrum(1.0, 1, {60.0, 6000}, natural, 2);
  EXPECT_NEAR(s.energies_plus[0], 0.875, 5e-4);
  EXPECT_NEAR(s.energies_plus[1], bohr_energy(1.0, 3, natural), 5e-4);
}

TEST(CoulombSpectrum, GuardRejectsCoarseGrid) {
  try {
    coulomb_radial_spectrum(2.0, 0, {60.0, 1000}, natural, 1);
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("n_points >= 2400"), std::string::npos) << e.what();
  }
  EXPECT_THROW(coulomb_radial_spectrum(1.0, 0, {60.0, 6000}, natural, 0), InvalidInput);
  EXPECT_THROW(coulomb_radial_spectrum(-1.0, 0, {60.0, 6000}, natural, 1), InvalidInput);
}

TEST(CoulombSpectrum, SecondOrderConvergence) {
  const auto c = coulomb_convergence(1.0, 0, {60.0, 1499}, natural, 0);
  EXPECT_NEAR(c.ratio, 4.0, 0.5);
  EXPECT_NEAR(c.extrapolated, 0.5, 1e-5);
}

TEST(CoulombSpectrum, CustomUnitsScaleLikeBohr) {
  PhysicalParams pp;
  pp.m0 = 2.0;
  pp.hbar = 1.5;
  pp.c = 1.2;
  // Bohr radius hbar^2/(m Z q^2) = 1.125; grid scaled accordingly.
  const auto s = coulomb_radial_spectrum(1.0, 0, {60.0, 6000}, pp, 2);
  EXPECT_NEAR(s.energies_plus[0], bohr_energy(1.0, 1, pp), 5e-4);
  EXPECT_NEAR(s.energies_plus[1], bohr_energy(1.0, 2, pp), 5e-4);
}

}  // namespace
}  // namespace negspin
