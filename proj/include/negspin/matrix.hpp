#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace negspin {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using Spinor2 = Eigen::Vector2cd;
using Spinor4 = Eigen::Vector4cd;

// Thrown when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an iterative routine gives up.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, std::size_t iterations)
      : std::runtime_error(what + " (after " + std::to_string(iterations) + " iterations)"),
        iterations_(iterations) {}

  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

/// Eigenvalues ascending, eigenvectors as orthonormal columns in matching order.
template <typename Real>
struct EigenDecomposition {
  Eigen::Matrix<Real, Eigen::Dynamic, 1> eigenvalues;
  CMatrix<Real> eigenvectors;
};

namespace detail {

template <typename Derived>
void require_nonempty(const Eigen::MatrixBase<Derived>& a, const char* op) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw InvalidInput(std::string(op) + ": empty matrix");
  }
}

inline std::string shape(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace detail

template <typename DerivedA, typename DerivedB>
auto mat_mul(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_nonempty(a, "mat_mul");
  detail::require_nonempty(b, "mat_mul");
  if (a.cols() != b.rows()) {
    throw InvalidInput("mat_mul: dimension mismatch " + detail::shape(a.rows(), a.cols()) +
                       " * " + detail::shape(b.rows(), b.cols()));
  }
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out = a * b;
  return out;
}

template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out = a.adjoint();
  return out;
}

// Kronecker product; block (i, j) of the result is a(i, j) * b.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_nonempty(a, "kron");
  detail::require_nonempty(b, "kron");
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

/// Largest elementwise |a - b|.
template <typename DerivedA, typename DerivedB>
double residual_norm(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("residual_norm: shape mismatch " + detail::shape(a.rows(), a.cols()) +
                       " vs " + detail::shape(b.rows(), b.cols()));
  }
  if (a.size() == 0) return 0.0;
  return static_cast<double>((a - b).cwiseAbs().maxCoeff());
}

template <typename Derived>
double hermiticity_residual(const Eigen::MatrixBase<Derived>& h) {
  if (h.rows() != h.cols()) {
    throw InvalidInput("hermiticity_residual: matrix is " + detail::shape(h.rows(), h.cols()));
  }
  return residual_norm(h, h.adjoint());
}

inline constexpr double kHermitianTolerance = 1e-10;

/// Diagonalizes a Hermitian matrix.
///
/// Rejects input whose Hermiticity residual is 1e-10 or more. Only the lower
/// triangle is read by the solver. Eigenvalues come out ascending; within a
/// degenerate cluster the eigenvectors are an arbitrary orthonormal basis, so
/// callers should compare subspace projectors, not individual columns.
template <typename Derived>
auto hermitian_eig(const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  detail::require_nonempty(h, "hermitian_eig");
  if (h.rows() != h.cols()) {
    throw InvalidInput("hermitian_eig: matrix is " + detail::shape(h.rows(), h.cols()));
  }
  const double herm = hermiticity_residual(h);
  if (!(herm < kHermitianTolerance)) {
    throw InvalidInput("hermitian_eig: input is not Hermitian (residual " + std::to_string(herm) +
                       ")");
  }
  CMatrix<Real> m = h.template cast<std::complex<Real>>();
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericFailure("hermitian_eig: QR iteration did not converge",
                         static_cast<std::size_t>(Eigen::SelfAdjointEigenSolver<
                                                  CMatrix<Real>>::m_maxIterations) *
                             static_cast<std::size_t>(h.rows()));
  }
  return EigenDecomposition<Real>{solver.eigenvalues(), solver.eigenvectors()};
}

/// Orthogonal projector onto span of the given (orthonormal) columns.
template <typename Derived>
auto projector(const Eigen::MatrixBase<Derived>& columns) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> p = columns * columns.adjoint();
  return p;
}

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return mat_mul(a, b) + mat_mul(b, a);
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return mat_mul(a, b) - mat_mul(b, a);
}

}  // namespace negspin
