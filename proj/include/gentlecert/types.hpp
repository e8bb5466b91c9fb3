// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_TYPES_HPP
#define GENTLECERT_TYPES_HPP

#include <complex>
#include <Eigen/Dense>

namespace gentlecert {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Numerical tolerances, double precision with headroom for d <= 64.
namespace tol {
inline constexpr double herm = 1e-10;    // hermiticity residual
inline constexpr double trace = 1e-10;   // |Tr - 1|
inline constexpr double norm = 1e-10;    // vector normalization
inline constexpr double psd = 1e-9;      // eigenvalue negativity slack
inline constexpr double eig = 1e-9;      // spectral reconstruction
inline constexpr double design = 1e-9;   // 2-design residuals
inline constexpr double prob = 1e-15;    // conditioning guard for outcome probabilities
}  // namespace tol

inline double herm_residual(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const CMatrix& m, double tau = tol::herm) {
  return m.rows() == m.cols() && herm_residual(m) <= tau;
}

}  // namespace gentlecert

#endif  // GENTLECERT_TYPES_HPP
