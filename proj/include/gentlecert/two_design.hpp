// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_TWO_DESIGN_HPP
#define GENTLECERT_TWO_DESIGN_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gentlecert/mub_tables.hpp"
#include "gentlecert/rng.hpp"
#include "gentlecert/states.hpp"
#include "gentlecert/types.hpp"

namespace gentlecert {

/// Finite set of unit vectors whose first and second moments match the Haar
/// measure on the unit sphere of C^d. Full validation checks the frame
/// identity sum_m |v_m><v_m| = (D/d) 1 and the second-moment identity
/// (1/D) sum_m (|v_m><v_m|)^x2 = 2/(d(d+1)) P_sym.
class TwoDesign {
 public:
  enum class Validate { Full, None };

  TwoDesign(int dim, std::vector<CVector> vectors, Validate mode = Validate::Full)
      : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ < 2) throw std::invalid_argument("TwoDesign: dim < 2");
    for (const auto& v : vectors_)
      if (v.size() != dim_) throw std::invalid_argument("TwoDesign: vector dimension mismatch");
    if (mode == Validate::Full) validate();
  }

  int dim() const { return dim_; }
  int count() const { return static_cast<int>(vectors_.size()); }
  const std::vector<CVector>& vectors() const { return vectors_; }
  const CVector& vector(int m) const { return vectors_.at(static_cast<std::size_t>(m)); }

  /// Frobenius residual of the frame identity.
  double frame_residual() const {
    CMatrix s = CMatrix::Zero(dim_, dim_);
    for (const auto& v : vectors_) s += v * v.adjoint();
    s -= (static_cast<double>(count()) / dim_) * CMatrix::Identity(dim_, dim_);
    return s.norm();
  }

  /// Max-entry residual of the second-moment identity against the explicit
  /// symmetric-subspace projector (1 + SWAP)/2 on C^d (x) C^d.
  double moment_residual() const {
    const int d = dim_;
    const int dd = d * d;
    CMatrix second = CMatrix::Zero(dd, dd);
    for (const auto& v : vectors_) {
      const CMatrix proj = v * v.adjoint();
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          second.block(i * d, j * d, d, d) += proj(i, j) * proj;
    }
    second /= static_cast<double>(count());
    CMatrix target = CMatrix::Identity(dd, dd);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) target(i * d + j, j * d + i) += 1.0;
    target *= 1.0 / (static_cast<double>(d) * (d + 1.0));
    return (second - target).cwiseAbs().maxCoeff();
  }

 private:
  void validate() const {
    for (const auto& v : vectors_)
      if (std::abs(v.norm() - 1.0) > tol::norm)
        throw std::invalid_argument("TwoDesign: vector not unit norm");
    if (frame_residual() > tol::design)
      throw std::invalid_argument("TwoDesign: frame identity violated");
    if (moment_residual() > tol::design)
      throw std::invalid_argument("TwoDesign: second-moment identity violated");
  }

  int dim_;
  std::vector<CVector> vectors_;
};

namespace detail {

inline bool is_odd_prime(int d) {
  if (d < 3 || d % 2 == 0) return false;
  for (int f = 3; f * f <= d; f += 2)
    if (d % f == 0) return false;
  return true;
}

inline void append_basis_columns(std::vector<CVector>& out, const CMatrix& basis) {
  for (int j = 0; j < basis.cols(); ++j) out.push_back(basis.col(j));
}

}  // namespace detail

inline bool mub_dimension_supported(int d) {
  return d == 2 || d == 4 || d == 8 || detail::is_odd_prime(d);
}

inline std::string mub_supported_dims_message() {
  return "supported dimensions: 2, any odd prime, 4 and 8";
}

/// Builds the d(d+1)-vector 2-design from d+1 mutually unbiased bases.
///
/// d = 2 ships the computational/Hadamard/circular bases; odd primes use the
/// quadratic exponential-sum bases (basis k, vector j, component t carries
/// phase exp(2 pi i (k t^2 + j t)/d)); d = 4 and d = 8 come from the
/// precomputed Galois-ring tables. The computational basis always comes
/// first, so the vector index is m = basis * d + column.
inline TwoDesign build_mub_design(int d) {
  if (!mub_dimension_supported(d))
    throw std::invalid_argument("build_mub_design: dimension " + std::to_string(d) +
                                " not supported; " + mub_supported_dims_message());
  std::vector<CVector> vecs;
  vecs.reserve(static_cast<std::size_t>(d) * (d + 1));
  detail::append_basis_columns(vecs, CMatrix::Identity(d, d));
  if (d == 2) {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix hadamard(2, 2), circular(2, 2);
    hadamard << s, s, s, -s;
    circular << Complex(s, 0), Complex(s, 0), Complex(0, s), Complex(0, -s);
    detail::append_basis_columns(vecs, hadamard);
    detail::append_basis_columns(vecs, circular);
  } else if (d == 4 || d == 8) {
    const std::uint8_t* table = (d == 4) ? detail::kMubPhaseExpD4 : detail::kMubPhaseExpD8;
    const Complex fourth_roots[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int a = 0; a < d; ++a) {
      CMatrix basis(d, d);
      for (int b = 0; b < d; ++b)
        for (int t = 0; t < d; ++t)
          basis(t, b) = scale * fourth_roots[table[(a * d + b) * d + t] & 3];
      detail::append_basis_columns(vecs, basis);
    }
  } else {
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    const double tau = 6.283185307179586476925286766559 / d;
    for (int k = 0; k < d; ++k) {
      CMatrix basis(d, d);
      for (int j = 0; j < d; ++j)
        for (int t = 0; t < d; ++t) {
          const double phase = tau * ((static_cast<long long>(k) * t * t + static_cast<long long>(j) * t) % d);
          basis(t, j) = scale * Complex(std::cos(phase), std::sin(phase));
        }
      detail::append_basis_columns(vecs, basis);
    }
  }
  return TwoDesign(d, std::move(vecs));
}

/// verify_two_design report. Residuals are reported for unit-Frobenius test
/// matrices, so the pass threshold is scale-free.
struct DesignVerification {
  double max_moment_residual = 0.0;
  double max_frame_residual = 0.0;
  bool pass = false;
};

/// Statistical audit of a 2-design candidate: for `trials` random Hermitian
/// M checks (1/D) sum_m <v_m|M|v_m>^2 = (Tr[M^2] + Tr[M]^2)/(d(d+1)), plus
/// the frame identity.
inline DesignVerification verify_two_design(const TwoDesign& design, int trials, Rng& rng) {
  const int d = design.dim();
  const int count = design.count();
  DesignVerification report;
  report.max_frame_residual = design.frame_residual();
  for (int t = 0; t < trials; ++t) {
    const CMatrix m = random_hermitian_unit(d, rng);
    double lhs = 0.0;
    for (const auto& v : design.vectors()) {
      const double q = (v.adjoint() * m * v)(0).real();
      lhs += q * q;
    }
    lhs /= count;
    const double tr = m.trace().real();
    const double rhs = ((m * m).trace().real() + tr * tr) / (static_cast<double>(d) * (d + 1.0));
    report.max_moment_residual = std::max(report.max_moment_residual, std::abs(lhs - rhs));
  }
  report.pass = report.max_moment_residual <= tol::design && report.max_frame_residual <= tol::design;
  return report;
}

/// Outcome distribution of measuring rho with the rank-one design POVM:
/// p_rho(m) = (d/D) <v_m|rho|v_m>.
inline std::vector<double> design_probabilities(const TwoDesign& design, const DensityMatrix& rho) {
  if (design.dim() != rho.dim())
    throw std::invalid_argument("design_probabilities: dimension mismatch");
  const double scale = static_cast<double>(design.dim()) / design.count();
  std::vector<double> p(static_cast<std::size_t>(design.count()));
  for (int m = 0; m < design.count(); ++m) {
    const auto& v = design.vector(m);
    p[static_cast<std::size_t>(m)] = std::max(0.0, scale * (v.adjoint() * rho.matrix() * v)(0).real());
  }
  return p;
}

}  // namespace gentlecert

#endif  // GENTLECERT_TWO_DESIGN_HPP
