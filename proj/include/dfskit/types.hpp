#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dfskit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Default comparison tolerance; most call sites accept an override.
inline constexpr double kDefaultTol = 1e-10;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.derived().cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = 1e-12) {
  return max_abs(m.derived() - m.derived().adjoint()) < tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = 1e-11) {
  const Matrix g = m.derived().adjoint() * m.derived();
  return max_abs(g - Matrix::Identity(m.rows(), m.cols())) < tol;
}

}  // namespace dfskit
