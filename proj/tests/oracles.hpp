#pragma once

// Reference computations used only by tests. None of these call into the
// library routines they are used to check.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_symmetric(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-30) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> w(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(w.begin(), w.end());
  return w;
}

// Eigenvalues of a complex Hermitian matrix via its real 2n x 2n embedding
// [[Re, -Im], [Im, Re]], whose spectrum is the Hermitian one doubled.
inline std::vector<double> hermitian_eigenvalues(const CMat& h) {
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd big(2 * n, 2 * n);
  big << h.real(), -h.imag(), h.imag(), h.real();
  const auto doubled = jacobi_symmetric(big);
  std::vector<double> w;
  for (std::size_t i = 0; i < doubled.size(); i += 2) w.push_back(0.5 * (doubled[i] + doubled[i + 1]));
  return w;
}

// Dirac-Pauli matrices written out entry by entry.
struct Literal {
  CMat beta = CMat::Zero(4, 4);
  CMat alpha[3] = {CMat::Zero(4, 4), CMat::Zero(4, 4), CMat::Zero(4, 4)};

  Literal() {
    const cd i(0, 1);
    beta.diagonal() << 1, 1, -1, -1;
    // alpha_x
    alpha[0](0, 3) = alpha[0](1, 2) = alpha[0](2, 1) = alpha[0](3, 0) = 1;
    // alpha_y
    alpha[1](0, 3) = -i;
    alpha[1](1, 2) = i;
    alpha[1](2, 1) = -i;
    alpha[1](3, 0) = i;
    // alpha_z
    alpha[2](0, 2) = 1;
    alpha[2](1, 3) = -1;
    alpha[2](2, 0) = 1;
    alpha[2](3, 1) = -1;
  }
};

inline CMat random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cd(u(rng), u(rng));
  return m;
}

inline CMat random_hermitian(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
  const CMat m = random_matrix(rng, n, n, scale);
  return 0.5 * (m + m.adjoint());
}

// Lowest eigenvalues of the radial Coulomb problem (natural units) by dense
// diagonalization of the 3-point finite-difference matrix.
inline std::vector<double> dense_radial_levels(double z, int l, double r_max, int n, int count) {
  const double h = r_max / (n + 1);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double r = (i + 1) * h;
    m(i, i) = 1.0 + 1.0 / (h * h) + 0.5 * l * (l + 1) / (r * r) - z / r;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = -0.5 / (h * h);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + count};
}

// Angular frequency from the mean spacing of upward mean crossings.
inline double zero_crossing_frequency(const std::vector<double>& t, const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  std::vector<double> crossings;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double a = v[i - 1] - mean;
    const double b = v[i] - mean;
    if (a < 0.0 && b >= 0.0) crossings.push_back(t[i - 1] + (t[i] - t[i - 1]) * (-a) / (b - a));
  }
  if (crossings.size() < 2) return 0.0;
  const double period = (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
  return 2.0 * 3.14159265358979323846 / period;
}

// Two-level interference: <O>(t) for c_a psi_a + c_b psi_b with exact phases.
inline double two_level_expectation(cd ca, cd cb, double ea, double eb, double oaa, double obb, cd oab,
                                    double t) {
  const cd cross = std::conj(ca) * cb * oab * std::exp(cd(0, -(eb - ea) * t));
  return std::norm(ca) * oaa + std::norm(cb) * obb + 2.0 * cross.real();
}

}  // namespace oracle
