#include "negspin/spectral.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace negspin {

namespace {

const DiracBasis& basis() {
  static const DiracBasis b = dirac_representation();
  return b;
}

void fix_phase(Spinor4& v) {
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  const auto phase = v(k) / std::abs(v(k));
  v /= phase;
  v(k) = std::abs(v(k));
}

std::string format_momentum(const MomentumVector& p) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << p.x() << "," << p.y() << "," << p.z() << ")";
  return os.str();
}

}  // namespace

void PhysicalParams::validate() const {
  if (!(m0 > 0.0) || !(c > 0.0) || !(hbar > 0.0) || !std::isfinite(m0) || !std::isfinite(c) ||
      !std::isfinite(hbar)) {
    throw InvalidInput("physical parameters m0, c, hbar must be positive and finite");
  }
  if (!std::isfinite(q)) throw InvalidInput("charge q must be finite");
}

std::string_view to_string(HamiltonianKind kind) {
  return kind == HamiltonianKind::dirac ? "dirac" : "nonrelativistic";
}

ComplexMatrix dirac_hamiltonian(const MomentumVector& p, const PhysicalParams& params) {
  params.validate();
  const auto& b = basis();
  return params.c * b.alpha_dot(p) + params.rest_energy() * b.beta;
}

ComplexMatrix nonrelativistic_hamiltonian(const MomentumVector& p, const PhysicalParams& params) {
  params.validate();
  const auto& b = basis();
  const ComplexMatrix ap = b.alpha_dot(p);
  return params.c * ap + params.rest_energy() * b.beta +
         b.i_beta_gamma5() * mat_mul(ap, ap) / (2.0 * params.m0);
}

ComplexMatrix free_hamiltonian(const MomentumVector& p, const PhysicalParams& params,
                               HamiltonianKind kind) {
  return kind == HamiltonianKind::dirac ? dirac_hamiltonian(p, params)
                                        : nonrelativistic_hamiltonian(p, params);
}

double closed_form_energy(const MomentumVector& p, const PhysicalParams& params,
                          HamiltonianKind kind) {
  const double p2 = p.squaredNorm();
  const double rest = params.rest_energy();
  if (kind == HamiltonianKind::dirac) return std::sqrt(params.c * params.c * p2 + rest * rest);
  return rest + p2 / (2.0 * params.m0);
}

EigenSolution free_spectrum(const MomentumVector& p, const PhysicalParams& params,
                            HamiltonianKind kind) {
  auto eig = hermitian_eig(free_hamiltonian(p, params, kind));
  EigenSolution out{eig.eigenvalues, eig.eigenvectors, {}};
  for (Eigen::Index i = 0; i < out.energies.size(); ++i) {
    out.branch.push_back(out.energies(i) < 0.0 ? -1 : 1);
  }
  return out;
}

const LabeledState& LabeledEigenstates::at(int branch, int helicity) const {
  const std::size_t idx = (branch > 0 ? 2u : 0u) + (helicity > 0 ? 1u : 0u);
  return states[idx];
}

LabeledEigenstates helicity_eigenstates(const MomentumVector& p, const PhysicalParams& params,
                                        HamiltonianKind kind) {
  const auto& b = basis();
  const EigenSolution spec = free_spectrum(p, params, kind);

  LabeledEigenstates out;
  const double pn = p.norm();
  out.spin_z_fallback = !(pn > 0.0);
  const Eigen::Vector3d axis = out.spin_z_fallback ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d(p / pn);
  const ComplexMatrix helicity_op =
      axis.x() * b.spin(0) + axis.y() * b.spin(1) + axis.z() * b.spin(2);

  // Energies are bounded away from zero by m0 c^2, so the two lowest columns
  // span the negative branch and the two highest the positive one.
  for (int br = 0; br < 2; ++br) {
    const ComplexMatrix sub = spec.eigenvectors.middleCols(2 * br, 2);
    const ComplexMatrix restricted = sub.adjoint() * helicity_op * sub;
    const ComplexMatrix herm = 0.5 * (restricted + restricted.adjoint());
    const auto heig = hermitian_eig(herm);
    for (int h = 0; h < 2; ++h) {
      LabeledState& s = out.states[static_cast<std::size_t>(2 * br + h)];
      s.spinor = sub * heig.eigenvectors.col(h);
      s.spinor.normalize();
      fix_phase(s.spinor);
      s.branch = br == 0 ? -1 : 1;
      s.helicity = heig.eigenvalues(h) < 0.0 ? -1 : 1;
      s.energy = spec.energies(2 * br + h);
    }
  }
  return out;
}

double expectation(const ComplexMatrix& op, const Spinor4& psi) {
  return (psi.adjoint() * op * psi)(0, 0).real();
}

ExpectationReport expectation_report(const MomentumVector& p, const PhysicalParams& params,
                                     HamiltonianKind kind, int branch, int helicity) {
  if ((branch != 1 && branch != -1) || (helicity != 1 && helicity != -1)) {
    throw InvalidInput("expectation_report: branch and helicity must be +1 or -1");
  }
  const auto& b = basis();
  const LabeledEigenstates states = helicity_eigenstates(p, params, kind);
  const LabeledState& s = states.at(branch, helicity);
  ExpectationReport r;
  r.branch = branch;
  r.helicity = helicity;
  r.energy = s.energy;
  for (int k = 0; k < 3; ++k) r.mean_alpha(k) = expectation(b.alpha[k], s.spinor);
  r.mean_beta = expectation(b.beta, s.spinor);
  r.mean_ibg5 = expectation(b.i_beta_gamma5(), s.spinor);
  return r;
}

EnergyMomentum lorentz_transform(double e_prime, const MomentumVector& p_prime,
                                 const Eigen::Vector3d& v, const PhysicalParams& params) {
  params.validate();
  const double c2 = params.c * params.c;
  const double v2 = v.squaredNorm();
  if (!(v2 < c2)) throw InvalidInput("lorentz_transform: |v| must be below c");
  const double gamma = 1.0 / std::sqrt(1.0 - v2 / c2);

  EnergyMomentum out;
  out.momentum = p_prime + gamma * v * e_prime / c2;
  if (v2 > 0.0) out.momentum += (gamma - 1.0) * v * p_prime.dot(v) / v2;
  out.energy = v.dot(out.momentum) + e_prime / gamma;
  return out;
}

CheckReport correspondence_check(const MomentumVector& p, const PhysicalParams& params,
                                 int branch) {
  if (branch != 1 && branch != -1) throw InvalidInput("correspondence_check: branch must be +1 or -1");
  const auto& b = basis();
  const auto states = helicity_eigenstates(p, params, HamiltonianKind::dirac);
  double worst = 0.0;
  for (int h : {-1, 1}) {
    const LabeledState& s = states.at(branch, h);
    Eigen::Vector3d v;
    for (int k = 0; k < 3; ++k) v(k) = params.c * expectation(b.alpha[k], s.spinor);
    const double inv_gamma = expectation(b.beta, s.spinor);
    const double rebuilt = v.dot(p) + params.rest_energy() * inv_gamma;
    const double rel = std::abs(s.energy - rebuilt) / std::abs(s.energy);
    if (rel > worst || rel != rel) worst = rel;
  }
  CheckReport report;
  report.add(std::string("E=v.p+m0c^2/gamma branch ") + (branch > 0 ? "+" : "-") + " p=" +
                 format_momentum(p),
             worst, kCorrespondenceTolerance);
  return report;
}

}  // namespace negspin
