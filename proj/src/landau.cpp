#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "negspin/clifford.hpp"
#include "negspin/fields.hpp"

namespace negspin {

namespace {

using cd = std::complex<double>;

void validate_landau(const UniformBField& field, std::size_t n_max, const PhysicalParams& params) {
  params.validate();
  if (!(field.b > 0.0) || !std::isfinite(field.b)) {
    throw InvalidInput("uniform field magnitude b must be positive");
  }
  if (params.q == 0.0) throw InvalidInput("Landau problem needs a nonzero charge q");
  if (n_max < kMinLandauLevels) {
    throw InvalidInput("n_max = " + std::to_string(n_max) + " is too coarse; use n_max >= " +
                       std::to_string(kMinLandauLevels));
  }
}

// Kinetic momenta on `dim` oscillator levels.
std::array<ComplexMatrix, 3> kinetic_momenta(const UniformBField& field, double pz,
                                             Eigen::Index dim, const PhysicalParams& params) {
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const ComplexMatrix ad = a.adjoint();

  const double scale = std::sqrt(2.0 * params.hbar * std::abs(params.q) * field.b / params.c);
  const double sign = params.q > 0.0 ? 1.0 : -1.0;
  return {
      ComplexMatrix(0.5 * scale * (a + ad)),
      ComplexMatrix(cd(0.0, -sign * 0.5 * scale) * (a - ad)),
      ComplexMatrix(pz * ComplexMatrix::Identity(dim, dim)),
  };
}

const DiracBasis& basis() {
  static const DiracBasis b = dirac_representation();
  return b;
}

std::size_t level_of(Eigen::Index index, std::size_t n_max) {
  return static_cast<std::size_t>(index) % (n_max + 1);
}

}  // namespace

double cyclotron_frequency(const UniformBField& field, const PhysicalParams& params) {
  return std::abs(params.q) * field.b / (params.m0 * params.c);
}

ComplexMatrix landau_kinetic_square(const UniformBField& field, double pz, std::size_t n_max,
                                    const PhysicalParams& params) {
  validate_landau(field, n_max, params);
  const auto dim = static_cast<Eigen::Index>(n_max + 1);
  const auto padded = kinetic_momenta(field, pz, dim + 1, params);
  const auto& b = basis();

  ComplexMatrix out = ComplexMatrix::Zero(4 * dim, 4 * dim);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const ComplexMatrix pipj = (padded[i] * padded[j]).topLeftCorner(dim, dim);
      out += kron(mat_mul(b.alpha[i], b.alpha[j]), pipj);
    }
  }
  return out;
}

ComplexMatrix landau_hamiltonian_matrix(const UniformBField& field, double pz, std::size_t n_max,
                                        const PhysicalParams& params) {
  validate_landau(field, n_max, params);
  const auto dim = static_cast<Eigen::Index>(n_max + 1);
  const auto pi = kinetic_momenta(field, pz, dim, params);
  const auto& b = basis();
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);

  ComplexMatrix alpha_pi = ComplexMatrix::Zero(4 * dim, 4 * dim);
  for (int k = 0; k < 3; ++k) alpha_pi += kron(b.alpha[k], pi[k]);

  const ComplexMatrix kinetic = landau_kinetic_square(field, pz, n_max, params);
  ComplexMatrix h = params.c * alpha_pi + params.rest_energy() * kron(b.beta, id) +
                    mat_mul(kron(b.i_beta_gamma5(), id), kinetic) / (2.0 * params.m0);
  return h;
}

ComplexMatrix minimal_coupling_hamiltonian(double v0, const UniformBField& field, double pz,
                                           std::size_t n_max, const PhysicalParams& params) {
  if (!std::isfinite(v0)) throw InvalidInput("scalar potential v0 must be finite");
  ComplexMatrix h = landau_hamiltonian_matrix(field, pz, n_max, params);
  h.diagonal().array() += v0;
  return h;
}

LandauSpectrum landau_levels_analytic(const UniformBField& field, double pz, std::size_t k_max,
                                      const PhysicalParams& params) {
  params.validate();
  if (!(field.b > 0.0)) throw InvalidInput("uniform field magnitude b must be positive");
  LandauSpectrum s;
  s.omega_c = cyclotron_frequency(field, params);
  s.pz = pz;
  const double base = params.rest_energy() + pz * pz / (2.0 * params.m0);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const double e = base + params.hbar * s.omega_c * static_cast<double>(k);
    s.levels.push_back({k, e, -e, k == 0 ? 1u : 2u});
  }
  return s;
}

LandauComparison compare_landau_levels(const UniformBField& field, double pz, std::size_t n_max,
                                       std::size_t k_max, const PhysicalParams& params,
                                       double v0) {
  if (k_max + 2 > n_max) {
    throw InvalidInput("k_max = " + std::to_string(k_max) + " needs n_max >= " +
                       std::to_string(k_max + 2));
  }
  const auto eig = hermitian_eig(minimal_coupling_hamiltonian(v0, field, pz, n_max, params));
  const Eigen::VectorXd& w = eig.eigenvalues;
  const Eigen::Index total = w.size();

  LandauComparison out;
  for (Eigen::Index i = 0; i < total / 2; ++i) {
    const double shifted = (w(i) - v0) + (w(total - 1 - i) - v0);
    out.pairing_residual = std::max(out.pairing_residual, std::abs(shifted));
  }

  // Ascending positive levels and descending negative levels, both starting
  // at the smallest |E - v0|.
  std::vector<double> plus;
  std::vector<double> minus;
  for (Eigen::Index i = 0; i < total; ++i) {
    (w(i) - v0 > 0.0 ? plus : minus).push_back(w(i));
  }
  std::reverse(minus.begin(), minus.end());

  const LandauSpectrum analytic = landau_levels_analytic(field, pz, k_max, params);
  std::size_t cursor = 0;
  for (const LandauLevel& level : analytic.levels) {
    LandauLevelComparison cmp;
    cmp.k = level.k;
    cmp.multiplicity = level.multiplicity;
    cmp.analytic_plus = level.energy_plus + v0;
    const double analytic_minus = level.energy_minus + v0;
    for (std::size_t m = 0; m < level.multiplicity; ++m, ++cursor) {
      if (cursor >= plus.size() || cursor >= minus.size()) {
        throw NumericFailure("compare_landau_levels: spectrum exhausted", cursor);
      }
      cmp.numeric_plus += plus[cursor];
      cmp.numeric_minus += minus[cursor];
      cmp.residual = std::max({cmp.residual, std::abs(plus[cursor] - cmp.analytic_plus),
                               std::abs(minus[cursor] - analytic_minus)});
    }
    cmp.numeric_plus /= static_cast<double>(level.multiplicity);
    cmp.numeric_minus /= static_cast<double>(level.multiplicity);
    out.levels.push_back(cmp);
  }
  return out;
}

SquareIdentityResult square_identity_check(const UniformBField& field, double pz,
                                           std::size_t n_max, const PhysicalParams& params) {
  const ComplexMatrix h = landau_hamiltonian_matrix(field, pz, n_max, params);
  const ComplexMatrix kinetic = landau_kinetic_square(field, pz, n_max, params);
  ComplexMatrix s = kinetic / (2.0 * params.m0);
  s.diagonal().array() += params.rest_energy();

  const ComplexMatrix square_diff = mat_mul(h, h) - mat_mul(s, s);
  const ComplexMatrix comm = commutator(h, s);

  SquareIdentityResult out;
  double square_res = 0.0;
  double comm_res = 0.0;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    if (level_of(i, n_max) + 2 > n_max) {
      ++out.excluded_states;
      continue;
    }
    square_res = std::max(square_res, square_diff.row(i).cwiseAbs().maxCoeff());
    comm_res = std::max(comm_res, comm.row(i).cwiseAbs().maxCoeff());
  }
  out.report.add("H^2=(m0c^2+(alpha.Pi)^2/2m0)^2 interior", square_res, kSquareIdentityTolerance);
  out.report.add("[H,m0c^2+(alpha.Pi)^2/2m0]=0 interior", comm_res, kSquareIdentityTolerance);
  return out;
}

}  // namespace negspin
