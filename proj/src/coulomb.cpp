#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "negspin/fields.hpp"

namespace negspin {

namespace {

// Number of eigenvalues of the tridiagonal matrix strictly below x.
std::size_t sturm_count(const Eigen::VectorXd& d, const Eigen::VectorXd& e, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() * 1e4;
  std::size_t count = 0;
  double q = 0.0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    q = i == 0 ? d(0) - x : d(i) - x - e(i - 1) * e(i - 1) / q;
    if (std::abs(q) < tiny) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

void RadialGrid::validate() const {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw InvalidInput("radial grid r_max must be positive");
  if (n_points < kMinRadialPoints) {
    throw InvalidInput("radial grid needs at least " + std::to_string(kMinRadialPoints) +
                       " points, got " + std::to_string(n_points));
  }
}

RadialTridiagonal radial_hamiltonian(double z, std::size_t l, const RadialGrid& grid,
                                     const PhysicalParams& params) {
  params.validate();
  grid.validate();
  const auto n = static_cast<Eigen::Index>(grid.n_points);
  const double h = grid.spacing();
  const double kinetic = params.hbar * params.hbar / (2.0 * params.m0);
  const double centrifugal = kinetic * static_cast<double>(l * (l + 1));
  const double coupling = z * params.q * params.q;

  RadialTridiagonal t;
  t.diagonal.resize(n);
  t.off_diagonal = Eigen::VectorXd::Constant(n - 1, -kinetic / (h * h));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = grid.node(static_cast<std::size_t>(i + 1));
    t.diagonal(i) = params.rest_energy() + 2.0 * kinetic / (h * h) + centrifugal / (r * r) -
                    coupling / r;
  }
  return t;
}

std::vector<double> tridiagonal_lowest_eigenvalues(const Eigen::VectorXd& diagonal,
                                                   const Eigen::VectorXd& off_diagonal,
                                                   std::size_t count) {
  const Eigen::Index n = diagonal.size();
  if (n < 1 || off_diagonal.size() != n - 1) {
    throw InvalidInput("tridiagonal_lowest_eigenvalues: inconsistent diagonal sizes");
  }
  if (count > static_cast<std::size_t>(n)) {
    throw InvalidInput("tridiagonal_lowest_eigenvalues: asked for more eigenvalues than rows");
  }

  // Gershgorin interval.
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (Eigen::Index i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off_diagonal(i - 1));
    if (i + 1 < n) radius += std::abs(off_diagonal(i));
    lo = std::min(lo, diagonal(i) - radius);
    hi = std::max(hi, diagonal(i) + radius);
  }
  const double span = std::max(std::abs(lo), std::abs(hi));
  const double tol = 4.0 * std::numeric_limits<double>::epsilon() * span;

  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    // k-th eigenvalue (0-based) is the smallest x with sturm_count(x) > k.
    double a = lo;
    double b = hi;
    constexpr int max_iterations = 200;
    int it = 0;
    while (b - a > tol && it < max_iterations) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(diagonal, off_diagonal, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
      ++it;
    }
    if (it == max_iterations) {
      throw NumericFailure("tridiagonal bisection did not converge", static_cast<std::size_t>(it));
    }
    out.push_back(0.5 * (a + b));
    lo = a;
  }
  return out;
}

CoulombSpectrum coulomb_radial_spectrum(double z, std::size_t l, const RadialGrid& grid,
                                        const PhysicalParams& params, std::size_t n_levels) {
  grid.validate();
  if (!(z > 0.0) || !std::isfinite(z)) throw InvalidInput("coulomb: Z must be positive");
  if (n_levels == 0) throw InvalidInput("coulomb: n_levels must be at least 1");
  if (!(grid.spacing() * z < kMaxSpacingTimesCharge)) {
    const auto suggested =
        static_cast<std::size_t>(std::ceil(grid.r_max * z / kMaxSpacingTimesCharge));
    throw InvalidInput("coulomb: grid too coarse (h*Z = " + std::to_string(grid.spacing() * z) +
                       " >= 0.05); use n_points >= " + std::to_string(suggested) +
                       " for r_max = " + std::to_string(grid.r_max));
  }
  if (n_levels > grid.n_points) throw InvalidInput("coulomb: n_levels exceeds grid size");

  const RadialTridiagonal t = radial_hamiltonian(z, l, grid, params);
  CoulombSpectrum s;
  s.z = z;
  s.l = l;
  s.energies_plus = tridiagonal_lowest_eigenvalues(t.diagonal, t.off_diagonal, n_levels);
  for (double e : s.energies_plus) s.energies_minus.push_back(-e);
  return s;
}

double bohr_energy(double z, std::size_t n, const PhysicalParams& params) {
  if (n == 0) throw InvalidInput("bohr_energy: principal number starts at 1");
  const double coupling = z * params.q * params.q;
  const double nn = static_cast<double>(n);
  return params.rest_energy() -
         params.m0 * coupling * coupling / (2.0 * params.hbar * params.hbar * nn * nn);
}

GridConvergence coulomb_convergence(double z, std::size_t l, const RadialGrid& grid,
                                    const PhysicalParams& params, std::size_t level_index) {
  const std::size_t n_levels = level_index + 1;
  const RadialGrid g2 = grid.refined();
  const RadialGrid g4 = g2.refined();
  GridConvergence c;
  c.energy_h = coulomb_radial_spectrum(z, l, grid, params, n_levels).energies_plus.back();
  c.energy_h2 = coulomb_radial_spectrum(z, l, g2, params, n_levels).energies_plus.back();
  c.energy_h4 = coulomb_radial_spectrum(z, l, g4, params, n_levels).energies_plus.back();
  c.extrapolated = (4.0 * c.energy_h4 - c.energy_h2) / 3.0;
  c.ratio = (c.energy_h - c.extrapolated) / (c.energy_h2 - c.extrapolated);
  return c;
}

}  // namespace negspin
