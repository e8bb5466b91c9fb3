// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_SPECTRAL_HPP
#define GENTLECERT_SPECTRAL_HPP

#include <stdexcept>

#include "gentlecert/types.hpp"

namespace gentlecert {

/// Eigenvalues ascending, columns of `eigenvectors` the matching orthonormal
/// eigenvectors.
struct SpectralDecomp {
  RVector eigenvalues;
  CMatrix eigenvectors;

  CMatrix reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
  }
};

/// Spectral decomposition of a Hermitian matrix. Rejects inputs whose
/// hermiticity residual exceeds `tau`.
inline SpectralDecomp spectral_decomp(const CMatrix& m, double tau = tol::herm) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectral_decomp: matrix not square");
  if (!is_hermitian(m, tau))
    throw std::invalid_argument("spectral_decomp: matrix not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectral_decomp: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Eigenvalues only (ascending) of a Hermitian matrix.
inline RVector hermitian_eigenvalues(const CMatrix& m, double tau = tol::herm) {
  if (!is_hermitian(m, tau))
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Positive square root of a PSD Hermitian matrix. Eigenvalues below zero
/// (allowed down to -tol::psd) are clamped to zero.
inline CMatrix sqrt_psd(const CMatrix& m) {
  SpectralDecomp sd = spectral_decomp(m);
  if (sd.eigenvalues(0) < -tol::psd)
    throw std::invalid_argument("sqrt_psd: matrix not PSD within tolerance");
  RVector roots = sd.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return sd.eigenvectors * roots.asDiagonal() * sd.eigenvectors.adjoint();
}

}  // namespace gentlecert

#endif  // GENTLECERT_SPECTRAL_HPP
