// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_HERMITIAN_BASIS_HPP
#define GENTLECERT_HERMITIAN_BASIS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gentlecert/types.hpp"

namespace gentlecert {

/// Orthonormal basis of the real space of d x d Hermitian matrices under
/// <A,B> = Tr[A*B]: generalized Gell-Mann matrices, reordered so that the
/// first d^2-1 elements are traceless and the last is identity/sqrt(d).
class HermitianBasis {
 public:
  explicit HermitianBasis(int d) : dim_(d) {
    if (d < 2) throw std::invalid_argument("HermitianBasis: d < 2");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    elements_.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        CMatrix sym = CMatrix::Zero(d, d);
        sym(j, k) = sym(k, j) = inv_sqrt2;
        elements_.push_back(sym);
        CMatrix asym = CMatrix::Zero(d, d);
        asym(j, k) = Complex(0.0, -inv_sqrt2);
        asym(k, j) = Complex(0.0, inv_sqrt2);
        elements_.push_back(asym);
      }
    }
    for (int l = 1; l < d; ++l) {
      CMatrix diag = CMatrix::Zero(d, d);
      const double factor = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1.0));
      for (int j = 0; j < l; ++j) diag(j, j) = factor;
      diag(l, l) = -static_cast<double>(l) * factor;
      elements_.push_back(diag);
    }
    elements_.push_back(CMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<CMatrix>& elements() const { return elements_; }
  const CMatrix& element(int j) const { return elements_.at(static_cast<std::size_t>(j)); }

  /// Real expansion coefficients of a Hermitian matrix: c_j = Tr[V_j A].
  RVector coefficients(const CMatrix& a) const {
    RVector c(size());
    for (int j = 0; j < size(); ++j)
      c(j) = (element(j).adjoint() * a).trace().real();
    return c;
  }

  CMatrix reconstruct(const RVector& coeffs) const {
    if (coeffs.size() != size()) throw std::invalid_argument("reconstruct: coefficient count mismatch");
    CMatrix a = CMatrix::Zero(dim_, dim_);
    for (int j = 0; j < size(); ++j) a += coeffs(j) * element(j);
    return a;
  }

 private:
  int dim_;
  std::vector<CMatrix> elements_;
};

inline HermitianBasis hermitian_basis(int d) { return HermitianBasis(d); }

}  // namespace gentlecert

#endif  // GENTLECERT_HERMITIAN_BASIS_HPP
