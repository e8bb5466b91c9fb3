// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_SUPEROP_HPP
#define GENTLECERT_SUPEROP_HPP

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gentlecert/hermitian_basis.hpp"
#include "gentlecert/rng.hpp"
#include "gentlecert/states.hpp"
#include "gentlecert/two_design.hpp"
#include "gentlecert/types.hpp"

namespace gentlecert {

/// A finite POVM given by explicit elements E_y: each PSD Hermitian, summing
/// to the identity.
class ExplicitPovm {
 public:
  enum class Validate { Full, None };

  explicit ExplicitPovm(std::vector<CMatrix> elements, Validate mode = Validate::Full)
      : elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("ExplicitPovm: no elements");
    dim_ = static_cast<int>(elements_.front().rows());
    for (const auto& e : elements_)
      if (e.rows() != dim_ || e.cols() != dim_)
        throw std::invalid_argument("ExplicitPovm: element dimension mismatch");
    if (mode == Validate::Full) validate();
  }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<CMatrix>& elements() const { return elements_; }
  const CMatrix& element(int y) const { return elements_.at(static_cast<std::size_t>(y)); }

  /// Projective measurement onto the columns of a unitary.
  static ExplicitPovm projective(const CMatrix& basis) {
    std::vector<CMatrix> elems;
    for (int j = 0; j < basis.cols(); ++j)
      elems.push_back(basis.col(j) * basis.col(j).adjoint());
    return ExplicitPovm(std::move(elems));
  }

  /// The rank-one 2-design measurement ((d/D) |v_m><v_m|)_m.
  static ExplicitPovm from_design(const TwoDesign& design) {
    const double scale = static_cast<double>(design.dim()) / design.count();
    std::vector<CMatrix> elems;
    elems.reserve(static_cast<std::size_t>(design.count()));
    for (const auto& v : design.vectors()) elems.push_back(scale * (v * v.adjoint()));
    return ExplicitPovm(std::move(elems));
  }

 private:
  void validate() const {
    CMatrix sum = CMatrix::Zero(dim_, dim_);
    for (const auto& e : elements_) {
      if (!is_hermitian(e)) throw std::invalid_argument("ExplicitPovm: element not Hermitian");
      Eigen::SelfAdjointEigenSolver<CMatrix> solver(e, Eigen::EigenvaluesOnly);
      if (solver.eigenvalues()(0) < -tol::psd)
        throw std::invalid_argument("ExplicitPovm: element not PSD");
      sum += e;
    }
    if ((sum - CMatrix::Identity(dim_, dim_)).norm() > tol::design)
      throw std::invalid_argument("ExplicitPovm: elements do not sum to identity");
  }

  int dim_;
  std::vector<CMatrix> elements_;
};

/// Direct application of the measurement super-operator
/// H(A) = sum_y Tr[A E_y] E_y / Tr[E_y].
inline CMatrix apply_superop(const ExplicitPovm& povm, const CMatrix& a) {
  if (a.rows() != povm.dim() || a.cols() != povm.dim())
    throw std::invalid_argument("apply_superop: dimension mismatch");
  CMatrix out = CMatrix::Zero(povm.dim(), povm.dim());
  for (const auto& e : povm.elements()) {
    const double tr = e.trace().real();
    if (tr <= tol::prob) throw std::invalid_argument("apply_superop: zero-trace element");
    out += ((a * e).trace() / tr) * e;
  }
  return out;
}

/// Matrix representation of the super-operator in an orthonormal Hermitian
/// basis: H[j,k] = <V_j, H(V_k)> = sum_y Tr[V_j E_y] Tr[V_k E_y] / Tr[E_y],
/// real symmetric, with eigen data attached (ascending).
struct SuperOpMatrix {
  int dim = 0;
  RMatrix matrix;        // d^2 x d^2
  RVector eigenvalues;   // ascending
  RMatrix eigenvectors;  // columns are coefficient vectors in the basis

  RVector apply_coeffs(const RVector& coeffs) const { return matrix * coeffs; }

  /// Index of the eigenvalue whose eigenvector carries the identity
  /// direction (largest coefficient on the last basis element).
  int identity_eigen_index() const {
    int best = 0;
    double best_overlap = -1.0;
    for (int i = 0; i < eigenvectors.cols(); ++i) {
      const double overlap = std::abs(eigenvectors(eigenvectors.rows() - 1, i));
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best = i;
      }
    }
    return best;
  }

  /// Sum of the eigenvalues on the traceless sector.
  double traceless_eigenvalue_sum() const {
    return eigenvalues.sum() - eigenvalues(identity_eigen_index());
  }
};

inline SuperOpMatrix superop_from_povm(const ExplicitPovm& povm, const HermitianBasis& basis) {
  if (basis.dim() != povm.dim()) throw std::invalid_argument("superop_from_povm: dimension mismatch");
  const int n = basis.size();
  SuperOpMatrix s;
  s.dim = povm.dim();
  s.matrix = RMatrix::Zero(n, n);
  for (const auto& e : povm.elements()) {
    const double tr = e.trace().real();
    if (tr <= tol::prob) throw std::invalid_argument("superop_from_povm: zero-trace element");
    const RVector c = basis.coefficients(e);
    s.matrix.noalias() += (c * c.transpose()) / tr;
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(s.matrix);
  s.eigenvalues = solver.eigenvalues();
  s.eigenvectors = solver.eigenvectors();
  return s;
}

/// Average channel (1/n) sum_i H_i of several POVMs on the same dimension.
inline SuperOpMatrix average_superop(const std::vector<ExplicitPovm>& povms,
                                     const HermitianBasis& basis) {
  if (povms.empty()) throw std::invalid_argument("average_superop: empty list");
  SuperOpMatrix avg;
  avg.dim = povms.front().dim();
  avg.matrix = RMatrix::Zero(basis.size(), basis.size());
  for (const auto& povm : povms) {
    if (povm.dim() != avg.dim) throw std::invalid_argument("average_superop: dimension mismatch");
    avg.matrix += superop_from_povm(povm, basis).matrix;
  }
  avg.matrix /= static_cast<double>(povms.size());
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(avg.matrix);
  avg.eigenvalues = solver.eigenvalues();
  avg.eigenvectors = solver.eigenvectors();
  return avg;
}

/// Channel-property report: self-adjointness, positivity, trace
/// preservation and unitality, plus the residual between matrix-representation
/// application and direct super-operator application on random inputs.
struct ChannelPropertyReport {
  double self_adjoint_residual = 0.0;
  double min_eigenvalue = 0.0;
  double trace_residual = 0.0;
  double unital_residual = 0.0;
  double rep_vs_direct_residual = 0.0;
  bool pass = false;
};

inline ChannelPropertyReport verify_channel_properties(const SuperOpMatrix& s,
                                                       const ExplicitPovm& povm,
                                                       const HermitianBasis& basis, int trials,
                                                       Rng& rng) {
  ChannelPropertyReport report;
  report.self_adjoint_residual = (s.matrix - s.matrix.transpose()).cwiseAbs().maxCoeff();
  report.min_eigenvalue = s.eigenvalues(0);
  const int d = povm.dim();
  const CMatrix identity = CMatrix::Identity(d, d);
  report.unital_residual = (apply_superop(povm, identity) - identity).cwiseAbs().maxCoeff();
  for (int t = 0; t < trials; ++t) {
    const CMatrix a = random_hermitian_unit(d, rng);
    const CMatrix ha = apply_superop(povm, a);
    report.trace_residual =
        std::max(report.trace_residual, std::abs(ha.trace().real() - a.trace().real()));
    const CMatrix hrep = basis.reconstruct(s.apply_coeffs(basis.coefficients(a)));
    report.rep_vs_direct_residual =
        std::max(report.rep_vs_direct_residual, (ha - hrep).cwiseAbs().maxCoeff());
  }
  report.pass = report.self_adjoint_residual <= 1e-9 && report.min_eigenvalue >= -1e-9 &&
                report.trace_residual <= 1e-9 && report.unital_residual <= 1e-9;
  return report;
}

/// Gentleness cap on the information the channel carries off the identity:
/// sum of traceless-sector eigenvalues against 16 alpha^2 / (1 - 4 alpha^2)^2.
struct EigenvalueSumReport {
  double traceless_sum = 0.0;
  double bound = 0.0;
  bool pass = false;
};

inline EigenvalueSumReport eigenvalue_sum_check(const SuperOpMatrix& s, double alpha) {
  if (!(alpha >= 0.0 && alpha < 0.5))
    throw std::invalid_argument("eigenvalue_sum_check: alpha outside [0, 1/2)");
  EigenvalueSumReport report;
  report.traceless_sum = s.traceless_eigenvalue_sum();
  const double one_minus = 1.0 - 4.0 * alpha * alpha;
  report.bound = 16.0 * alpha * alpha / (one_minus * one_minus);
  report.pass = report.traceless_sum <= report.bound + 1e-9;
  return report;
}

}  // namespace gentlecert

#endif  // GENTLECERT_SUPEROP_HPP
