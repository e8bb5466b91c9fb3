// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_STATES_HPP
#define GENTLECERT_STATES_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

#include "gentlecert/rng.hpp"
#include "gentlecert/spectral.hpp"
#include "gentlecert/types.hpp"

namespace gentlecert {

/// Normalized vector in C^d identified with the rank-one state it represents.
class PureState {
 public:
  explicit PureState(CVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 1) throw std::invalid_argument("PureState: empty vector");
    if (std::abs(amps_.norm() - 1.0) > tol::norm)
      throw std::invalid_argument("PureState: vector not normalized");
  }

  int dim() const { return static_cast<int>(amps_.size()); }
  const CVector& amplitudes() const { return amps_; }
  CMatrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  CVector amps_;
};

/// Quantum state: Hermitian, PSD and unit trace within the module tolerances.
/// Construction validates all three invariants.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
      throw std::invalid_argument("DensityMatrix: matrix not square");
    if (!is_hermitian(mat_))
      throw std::invalid_argument("DensityMatrix: matrix not Hermitian");
    if (std::abs(mat_.trace().real() - 1.0) > tol::trace || std::abs(mat_.trace().imag()) > tol::trace)
      throw std::invalid_argument("DensityMatrix: trace differs from one");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues()(0) < -tol::psd)
      throw std::invalid_argument("DensityMatrix: matrix not PSD");
  }

  DensityMatrix(const PureState& psi) : DensityMatrix(psi.projector()) {}  // NOLINT(google-explicit-constructor)

  int dim() const { return static_cast<int>(mat_.rows()); }
  const CMatrix& matrix() const { return mat_; }

 private:
  CMatrix mat_;
};

inline DensityMatrix maximally_mixed(int d) {
  if (d < 1) throw std::invalid_argument("maximally_mixed: d < 1");
  return DensityMatrix(CMatrix::Identity(d, d) / static_cast<double>(d));
}

/// Haar-distributed pure state: complex Gaussian vector, normalized.
inline PureState random_pure_state(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("random_pure_state: d < 1");
  CVector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return PureState(v / v.norm());
}

/// Full-support random state: d Haar pure states mixed with uniform
/// Dirichlet weights.
inline DensityMatrix random_density(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("random_density: d < 1");
  const std::vector<double> w = rng.dirichlet_uniform(d);
  CMatrix rho = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) rho += w[static_cast<std::size_t>(i)] * random_pure_state(d, rng).projector();
  // symmetrize away accumulation noise
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(rho / rho.trace().real());
}

/// Random Hermitian matrix with independent Gaussian entries (GUE-like),
/// normalized to unit Frobenius norm.
inline CMatrix random_hermitian_unit(int d, Rng& rng) {
  CMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(rng.normal(), rng.normal());
  CMatrix h = 0.5 * (a + a.adjoint().eval());
  return h / h.norm();
}

// ---------------------------------------------------------------------------
// State metrics (trace norm: Schatten-1 halved; Frobenius: Schatten-2).
// ---------------------------------------------------------------------------

inline void require_equal_dims(const DensityMatrix& a, const DensityMatrix& b, const char* who) {
  if (a.dim() != b.dim()) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

/// Half the sum of absolute eigenvalues of a - b; lies in [0, 1].
inline double trace_norm_dist(const DensityMatrix& a, const DensityMatrix& b) {
  require_equal_dims(a, b, "trace_norm_dist");
  const RVector mu = hermitian_eigenvalues(a.matrix() - b.matrix());
  return 0.5 * mu.cwiseAbs().sum();
}

inline double frobenius_dist(const DensityMatrix& a, const DensityMatrix& b) {
  require_equal_dims(a, b, "frobenius_dist");
  return (a.matrix() - b.matrix()).norm();
}

}  // namespace gentlecert

#endif  // GENTLECERT_STATES_HPP
