// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_LOWERBOUND_HPP
#define GENTLECERT_LOWERBOUND_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gentlecert/hermitian_basis.hpp"
#include "gentlecert/rng.hpp"
#include "gentlecert/states.hpp"
#include "gentlecert/superop.hpp"
#include "gentlecert/types.hpp"

namespace gentlecert {

/// Universal amplitude constant of the perturbation ensemble.
inline constexpr double kEnsembleConstant = 14.142135623730950488;  // 10 sqrt(2)

using SignVector = std::vector<int>;

inline SignVector random_sign_vector(int size, Rng& rng) {
  SignVector nu(static_cast<std::size_t>(size));
  for (auto& s : nu) s = rng.bernoulli(0.5) ? 1 : -1;
  return nu;
}

inline SignVector sign_vector_from_index(std::uint32_t index, int size) {
  SignVector nu(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) nu[static_cast<std::size_t>(i)] = ((index >> i) & 1u) ? 1 : -1;
  return nu;
}

/// Random-sign perturbation family around the maximally mixed state:
/// rho_nu = 1/d + (c eps / sqrt(d D')) sum_i nu_i V_i over traceless
/// orthonormal directions V_i.
struct AlternativeEnsemble {
  int dim = 0;
  std::vector<CMatrix> directions;  // D' traceless orthonormal Hermitian matrices
  double epsilon = 0.0;
  double c = kEnsembleConstant;
  double amplitude = 0.0;  // c eps / sqrt(d D')

  int count() const { return static_cast<int>(directions.size()); }

  CMatrix delta(const SignVector& nu) const {
    if (static_cast<int>(nu.size()) != count())
      throw std::invalid_argument("AlternativeEnsemble::delta: sign vector length mismatch");
    CMatrix d0 = CMatrix::Zero(dim, dim);
    for (int i = 0; i < count(); ++i)
      d0 += static_cast<double>(nu[static_cast<std::size_t>(i)]) * directions[static_cast<std::size_t>(i)];
    return amplitude * d0;
  }

  /// rho_nu as a raw matrix; may fail positivity for inadmissible nu.
  CMatrix state(const SignVector& nu) const {
    return CMatrix::Identity(dim, dim) / static_cast<double>(dim) + delta(nu);
  }
};

enum class AlternativeMode { Fixed, Randomized };

namespace detail {

/// Random orthonormal set of `count` traceless Hermitian matrices, built by
/// Gram-Schmidt on Gaussian coefficient vectors over the traceless basis
/// sector.
inline std::vector<CMatrix> random_traceless_directions(const HermitianBasis& basis, int count,
                                                        Rng& rng) {
  const int traceless = basis.size() - 1;
  std::vector<RVector> coeffs;
  while (static_cast<int>(coeffs.size()) < count) {
    RVector v(traceless);
    for (int i = 0; i < traceless; ++i) v(i) = rng.normal();
    for (const auto& u : coeffs) v -= u.dot(v) * u;
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    coeffs.push_back(v / norm);
  }
  std::vector<CMatrix> dirs;
  dirs.reserve(static_cast<std::size_t>(count));
  for (const auto& v : coeffs) {
    RVector full = RVector::Zero(basis.size());
    full.head(traceless) = v;
    dirs.push_back(basis.reconstruct(full));
  }
  return dirs;
}

}  // namespace detail

/// Selects the perturbation directions: mode Fixed takes the D' traceless
/// eigenvectors of the channel with the smallest eigenvalues (eigenvalue
/// ties broken by solver order; any choice within an eigenspace pairs
/// identically); mode Randomized draws a uniformly random traceless
/// orthonormal subset.
inline AlternativeEnsemble build_alternatives(const SuperOpMatrix& s, const HermitianBasis& basis,
                                              double epsilon, int count, AlternativeMode mode,
                                              Rng& rng) {
  const int d = s.dim;
  if (basis.dim() != d) throw std::invalid_argument("build_alternatives: basis dimension mismatch");
  const int lo = (d * d + 1) / 2;
  const int hi = d * d - 1;
  if (count < lo || count > hi)
    throw std::invalid_argument("build_alternatives: D' outside [ceil(d^2/2), d^2-1]");
  const double c = kEnsembleConstant;
  if (!(epsilon > 0.0 && epsilon < 1.0 / (c * c)))
    throw std::invalid_argument("build_alternatives: epsilon outside (0, 1/c^2)");
  AlternativeEnsemble ens;
  ens.dim = d;
  ens.epsilon = epsilon;
  ens.c = c;
  ens.amplitude = c * epsilon / std::sqrt(static_cast<double>(d) * count);
  if (mode == AlternativeMode::Randomized) {
    ens.directions = detail::random_traceless_directions(basis, count, rng);
    return ens;
  }
  // Traceless sector of the channel matrix: the basis is ordered traceless
  // first, and the identity direction decouples exactly, so the leading
  // (d^2-1) principal block is the traceless restriction.
  const int traceless = basis.size() - 1;
  const RMatrix block = s.matrix.topLeftCorner(traceless, traceless);
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(block);
  for (int i = 0; i < count; ++i) {
    RVector full = RVector::Zero(basis.size());
    full.head(traceless) = solver.eigenvectors().col(i);
    ens.directions.push_back(basis.reconstruct(full));
  }
  return ens;
}

struct AdmissibilityReport {
  double fraction = 0.0;
  int samples = 0;
};

/// Empirical fraction of sign vectors whose perturbed state is PSD and
/// farther than epsilon from the maximally mixed state in trace norm.
inline AdmissibilityReport admissibility_stats(const AlternativeEnsemble& ens, int samples,
                                               Rng& rng) {
  AdmissibilityReport report;
  report.samples = samples;
  int good = 0;
  for (int i = 0; i < samples; ++i) {
    const SignVector nu = random_sign_vector(ens.count(), rng);
    const CMatrix delta = ens.delta(nu);
    const RVector mu = hermitian_eigenvalues(delta);
    const double trace_dist = 0.5 * mu.cwiseAbs().sum();
    const double min_eig_state = 1.0 / ens.dim + mu(0);
    if (min_eig_state >= -tol::psd && trace_dist > ens.epsilon) ++good;
  }
  report.fraction = static_cast<double>(good) / samples;
  return report;
}

enum class Chi2Mode { Exact, MonteCarlo };

struct Chi2Result {
  double chi2 = 0.0;
  /// (e^d/(e^d-2))^2, the inflation from conditioning on admissible sign
  /// vectors; reported alongside so callers can form the conditioned bound.
  double conditioning_factor = 0.0;
};

/// Decoupled chi-squared fluctuation of the averaged alternative around the
/// null product distribution:
///   chi2 = E_{nu1,nu2}[ prod_i (1 + H_i(nu1,nu2)) ] - 1,
/// with H_i(nu1,nu2) = d Tr[Delta_{nu1} H_i(Delta_{nu2})] evaluated through
/// the matrix representation. Requires rho0 = 1/d (the d prefactor uses
/// p(y) = Tr[E_y]/d). `superops` holds either one channel shared by all n
/// copies or one channel per copy.
inline Chi2Result chi2_decoupled(const std::vector<SuperOpMatrix>& superops,
                                 const HermitianBasis& basis, const AlternativeEnsemble& ens,
                                 int n, Chi2Mode mode, Rng& rng, int mc_pairs = 20000) {
  if (superops.empty()) throw std::invalid_argument("chi2_decoupled: no channels");
  if (n < 1) throw std::invalid_argument("chi2_decoupled: n < 1");
  if (superops.size() != 1 && static_cast<int>(superops.size()) != n)
    throw std::invalid_argument("chi2_decoupled: need one channel or one per copy");
  const int d = ens.dim;
  const int count = ens.count();
  // Pairing matrices G_i[a,b] = d amp^2 <V_a, H_i(V_b)> over the ensemble
  // directions.
  RMatrix dir_coeffs(basis.size(), count);
  for (int a = 0; a < count; ++a)
    dir_coeffs.col(a) = basis.coefficients(ens.directions[static_cast<std::size_t>(a)]);
  std::vector<RMatrix> pairings;
  pairings.reserve(superops.size());
  for (const auto& s : superops) {
    if (s.dim != d) throw std::invalid_argument("chi2_decoupled: channel dimension mismatch");
    pairings.push_back(static_cast<double>(d) * ens.amplitude * ens.amplitude *
                       (dir_coeffs.transpose() * s.matrix * dir_coeffs));
  }
  const bool shared = pairings.size() == 1;
  auto pair_product = [&](const RVector& nu1, const RVector& nu2) {
    double prod = 1.0;
    if (shared) {
      const double h = nu1.dot(pairings[0] * nu2);
      if (1.0 + h <= 0.0)
        throw std::domain_error("chi2_decoupled: invalid regime (1 + H_i <= 0)");
      prod = std::pow(1.0 + h, n);
    } else {
      for (const auto& g : pairings) {
        const double h = nu1.dot(g * nu2);
        if (1.0 + h <= 0.0)
          throw std::domain_error("chi2_decoupled: invalid regime (1 + H_i <= 0)");
        prod *= 1.0 + h;
      }
    }
    return prod;
  };
  auto to_vec = [count](const SignVector& nu) {
    RVector v(count);
    for (int i = 0; i < count; ++i) v(i) = static_cast<double>(nu[static_cast<std::size_t>(i)]);
    return v;
  };
  Chi2Result result;
  const double ed = std::exp(static_cast<double>(d));
  result.conditioning_factor = (ed / (ed - 2.0)) * (ed / (ed - 2.0));
  if (mode == Chi2Mode::Exact) {
    if (count > 12)
      throw std::invalid_argument("chi2_decoupled: exact enumeration limited to D' <= 12");
    const std::uint32_t total = 1u << count;
    double sum = 0.0;
    for (std::uint32_t i1 = 0; i1 < total; ++i1) {
      const RVector nu1 = to_vec(sign_vector_from_index(i1, count));
      for (std::uint32_t i2 = 0; i2 < total; ++i2)
        sum += pair_product(nu1, to_vec(sign_vector_from_index(i2, count)));
    }
    result.chi2 = sum / (static_cast<double>(total) * total) - 1.0;
    return result;
  }
  double sum = 0.0;
  for (int i = 0; i < mc_pairs; ++i)
    sum += pair_product(to_vec(random_sign_vector(count, rng)), to_vec(random_sign_vector(count, rng)));
  result.chi2 = sum / mc_pairs - 1.0;
  return result;
}

enum class LowerBoundMode { Fixed, Randomized };

/// Sample size at which the closed-form chi-squared upper bound reaches 4/9,
/// the level that forces test error at least 1/3. Fixed measurements use the
/// exponential bound with D = d^2/2 (n* scales as d^3 / (eps^2 alpha^2));
/// randomized measurements use the unordered-eigenvalue bound
/// 256 alpha^4/(1-4 alpha)^4 with D = d^2 - 1 (n* scales as d^2).
inline double lower_bound_sample_size(int d, double epsilon, double alpha, LowerBoundMode mode) {
  if (d < 2) throw std::invalid_argument("lower_bound_sample_size: d < 2");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("lower_bound_sample_size: epsilon outside (0, 1)");
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("lower_bound_sample_size: alpha outside (0, 1/2)");
  const double c = kEnsembleConstant;
  const double log_term = std::log(13.0 / 9.0);
  if (mode == LowerBoundMode::Fixed) {
    // exp(512 n^2 c^4 eps^4 alpha^4 / (2 D^2 d^2)) - 1 = 4/9 at D = d^2/2
    const double d3 = static_cast<double>(d) * d * d;
    return d3 * std::sqrt(log_term) / (32.0 * c * c * epsilon * epsilon * alpha * alpha);
  }
  const double one_minus = 1.0 - 4.0 * alpha;
  if (one_minus == 0.0)
    throw std::domain_error("lower_bound_sample_size: randomized bound singular at alpha = 1/4");
  const double cap = 256.0 * std::pow(alpha, 4) / std::pow(one_minus, 4);
  const double design_count = static_cast<double>(d) * d - 1.0;
  return design_count * std::sqrt(2.0 * log_term / cap) / (c * c * epsilon * epsilon);
}

}  // namespace gentlecert

#endif  // GENTLECERT_LOWERBOUND_HPP
