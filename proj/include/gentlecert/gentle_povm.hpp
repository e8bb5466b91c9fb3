// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_GENTLE_POVM_HPP
#define GENTLECERT_GENTLE_POVM_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gentlecert/rng.hpp"
#include "gentlecert/spectral.hpp"
#include "gentlecert/states.hpp"
#include "gentlecert/two_design.hpp"
#include "gentlecert/types.hpp"

namespace gentlecert {

/// Measurement outcome: a bit vector z of length D (the design size).
struct Outcome {
  std::vector<std::uint8_t> bits;

  Outcome() = default;
  explicit Outcome(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  /// Basis outcome e_m: all zero except bit m.
  static Outcome unit(int count, int m) {
    Outcome z;
    z.bits.assign(static_cast<std::size_t>(count), 0);
    z.bits.at(static_cast<std::size_t>(m)) = 1;
    return z;
  }

  static Outcome from_index(std::uint32_t index, int count) {
    Outcome z;
    z.bits.resize(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) z.bits[static_cast<std::size_t>(j)] = (index >> j) & 1u;
    return z;
  }

  int size() const { return static_cast<int>(bits.size()); }
  int weight() const {
    int w = 0;
    for (auto b : bits) w += b;
    return w;
  }

  std::string to_string() const {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? '1' : '0';
    return s;
  }

  static Outcome from_string(const std::string& s) {
    Outcome z;
    z.bits.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("Outcome: invalid bit character");
      z.bits.push_back(c == '1' ? 1 : 0);
    }
    return z;
  }

  bool operator==(const Outcome& other) const { return bits == other.bits; }
};

/// The noisy 2-design measurement family {E_{delta,z}}_{z in {0,1}^D},
/// represented implicitly by the design and the noise level; elements are
/// materialized on demand. The gentleness parameter alpha in [0, 1/2)
/// fixes delta = 4 artanh(alpha) and beta = 1/(e^{delta/2}+1).
class GentlePovm {
 public:
  GentlePovm(TwoDesign design, double alpha) : design_(std::move(design)), alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha < 0.5))
      throw std::invalid_argument("GentlePovm: alpha must lie in [0, 1/2)");
    delta_ = 4.0 * std::atanh(alpha);
    beta_ = 1.0 / (std::exp(delta_ / 2.0) + 1.0);
  }

  const TwoDesign& design() const { return design_; }
  int dim() const { return design_.dim(); }
  int count() const { return design_.count(); }
  double alpha() const { return alpha_; }
  double delta() const { return delta_; }
  double beta() const { return beta_; }

 private:
  TwoDesign design_;
  double alpha_;
  double delta_;
  double beta_;
};

/// Materializes E_{delta,z} = (e^{d/2}/(e^{d/2}+1))^D (d/D)
/// sum_m e^{-(delta/2)||z - e_m||_1} |v_m><v_m|. Note ||z - e_m||_1 equals
/// |z| + 1 - 2 z_m.
inline CMatrix povm_element(const GentlePovm& povm, const Outcome& z) {
  const int count = povm.count();
  if (z.size() != count) throw std::invalid_argument("povm_element: outcome length mismatch");
  const int d = povm.dim();
  const double half = povm.delta() / 2.0;
  const int k = z.weight();
  const double coeff =
      std::pow(std::exp(half) / (std::exp(half) + 1.0), count) * static_cast<double>(d) / count;
  CMatrix e = CMatrix::Zero(d, d);
  for (int m = 0; m < count; ++m) {
    const auto& v = povm.design().vector(m);
    const double w = std::exp(-half * (k + 1 - 2 * z.bits[static_cast<std::size_t>(m)]));
    e.noalias() += w * (v * v.adjoint());
  }
  return coeff * e;
}

enum class CompletenessMode { Exact, Analytic };

/// Residual of the completeness relation sum_z E_{delta,z} = identity.
///
/// Exact mode enumerates all 2^D outcomes (requires D <= 24) and returns the
/// Frobenius norm of the accumulated sum minus identity. Analytic mode
/// evaluates the closed-form binomial identity
/// (e^{-delta/2}+1)^{D-1} + (e^{-delta/2}+1)^{D-1} e^{-delta/2} behind the
/// completeness proof and returns |scalar - 1| sqrt(d).
inline double completeness_check(const GentlePovm& povm, CompletenessMode mode) {
  const int count = povm.count();
  const int d = povm.dim();
  const double half = povm.delta() / 2.0;
  if (mode == CompletenessMode::Analytic) {
    const double em = std::exp(-half);
    const double bracket = std::pow(em + 1.0, count - 1) + std::pow(em + 1.0, count - 1) * em;
    const double scalar = std::pow(std::exp(half) / (std::exp(half) + 1.0), count) * bracket;
    return std::abs(scalar - 1.0) * std::sqrt(static_cast<double>(d));
  }
  if (count > 24)
    throw std::invalid_argument("completeness_check: exact enumeration limited to D <= 24");
  // weight table: exponents |z| + 1 - 2 z_m lie in [0, D+1]
  std::vector<double> wtab(static_cast<std::size_t>(count) + 2);
  for (std::size_t j = 0; j < wtab.size(); ++j) wtab[j] = std::exp(-half * static_cast<double>(j));
  std::vector<double> acc(static_cast<std::size_t>(count), 0.0);
  const std::uint32_t total = 1u << count;
  for (std::uint32_t idx = 0; idx < total; ++idx) {
    const int k = std::popcount(idx);
    const double w0 = wtab[static_cast<std::size_t>(k) + 1];
    const double w1 = (k >= 1) ? wtab[static_cast<std::size_t>(k) - 1] : 0.0;
    for (int m = 0; m < count; ++m) acc[static_cast<std::size_t>(m)] += ((idx >> m) & 1u) ? w1 : w0;
  }
  const double coeff =
      std::pow(std::exp(half) / (std::exp(half) + 1.0), count) * static_cast<double>(d) / count;
  CMatrix sum = CMatrix::Zero(d, d);
  for (int m = 0; m < count; ++m) {
    const auto& v = povm.design().vector(m);
    sum.noalias() += (coeff * acc[static_cast<std::size_t>(m)]) * (v * v.adjoint());
  }
  return (sum - CMatrix::Identity(d, d)).norm();
}

/// All 2^D elements, indexed by the outcome bit pattern of the array index.
inline std::vector<CMatrix> materialize_elements(const GentlePovm& povm) {
  if (povm.count() > 24)
    throw std::invalid_argument("materialize_elements: limited to D <= 24");
  const std::uint32_t total = 1u << povm.count();
  std::vector<CMatrix> elems;
  elems.reserve(total);
  for (std::uint32_t idx = 0; idx < total; ++idx)
    elems.push_back(povm_element(povm, Outcome::from_index(idx, povm.count())));
  return elems;
}

/// Two-stage sampler for the gentle POVM outcome law: draw m from the
/// non-gentle design distribution, then flip each bit independently with the
/// binary randomized-response kernel (bit m is 1 with probability
/// e^{delta/2}/(e^{delta/2}+1), every other bit with probability beta).
/// The resulting law over z equals z -> Tr[rho E_{delta,z}] exactly.
class OutcomeSampler {
 public:
  OutcomeSampler(std::vector<double> probs, double delta)
      : probs_(std::move(probs)), delta_(delta) {
    if (delta < 0.0) throw std::invalid_argument("OutcomeSampler: delta < 0");
    beta_ = 1.0 / (std::exp(delta / 2.0) + 1.0);
    keep_ = 1.0 - beta_;
    cdf_.resize(probs_.size());
    double run = 0.0;
    for (std::size_t m = 0; m < probs_.size(); ++m) {
      run += std::max(0.0, probs_[m]);
      cdf_[m] = run;
    }
    if (!(cdf_.back() > 0.0)) throw std::invalid_argument("OutcomeSampler: degenerate distribution");
  }

  double delta() const { return delta_; }
  double beta() const { return beta_; }
  double keep_probability() const { return keep_; }

  Outcome sample(Rng& rng) const {
    Outcome z;
    sample_into(rng, z.bits);
    return z;
  }

  /// Allocation-free sampling path for tight loops.
  void sample_into(Rng& rng, std::vector<std::uint8_t>& bits) const {
    const int m = rng.sample_cdf(cdf_);
    const int count = static_cast<int>(probs_.size());
    bits.resize(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
      bits[static_cast<std::size_t>(j)] = rng.bernoulli(j == m ? keep_ : beta_) ? 1 : 0;
  }

  /// Chain probability of one outcome: sum_m p(m) Q(z | m) with
  /// Q(z|m) = beta^{||z-e_m||_1} (1-beta)^{D-||z-e_m||_1}.
  double outcome_probability(const Outcome& z) const {
    const int count = static_cast<int>(probs_.size());
    if (z.size() != count) throw std::invalid_argument("outcome_probability: length mismatch");
    const int k = z.weight();
    double total = 0.0;
    for (int m = 0; m < count; ++m) {
      const int dist = k + 1 - 2 * z.bits[static_cast<std::size_t>(m)];
      total += probs_[static_cast<std::size_t>(m)] * std::pow(beta_, dist) *
               std::pow(keep_, count - dist);
    }
    return total;
  }

  /// Full chain distribution over all 2^D outcomes (D <= 24).
  std::vector<double> full_distribution() const {
    const int count = static_cast<int>(probs_.size());
    if (count > 24) throw std::invalid_argument("full_distribution: limited to D <= 24");
    std::vector<double> p(static_cast<std::size_t>(1) << count);
    for (std::uint32_t idx = 0; idx < p.size(); ++idx)
      p[idx] = outcome_probability(Outcome::from_index(idx, count));
    return p;
  }

 private:
  std::vector<double> probs_;
  std::vector<double> cdf_;
  double delta_;
  double beta_;
  double keep_;
};

inline OutcomeSampler make_sampler(const GentlePovm& povm, const DensityMatrix& rho) {
  if (povm.dim() != rho.dim()) throw std::invalid_argument("make_sampler: dimension mismatch");
  return OutcomeSampler(design_probabilities(povm.design(), rho), povm.delta());
}

inline Outcome sample_outcome(const GentlePovm& povm, const DensityMatrix& rho, Rng& rng) {
  return make_sampler(povm, rho).sample(rng);
}

/// Exact outcome distribution z -> Tr[rho E_{delta,z}] over all 2^D outcomes.
inline std::vector<double> povm_outcome_distribution(const GentlePovm& povm, const DensityMatrix& rho) {
  if (povm.count() > 24)
    throw std::invalid_argument("povm_outcome_distribution: limited to D <= 24");
  std::vector<double> p(static_cast<std::size_t>(1) << povm.count());
  for (std::uint32_t idx = 0; idx < p.size(); ++idx) {
    const CMatrix e = povm_element(povm, Outcome::from_index(idx, povm.count()));
    p[idx] = (rho.matrix() * e).trace().real();
  }
  return p;
}

/// Post-measurement state sqrt(E) rho sqrt(E) / Tr[rho E] for the positive
/// square-root implementation M_{delta,z} = sqrt(E_{delta,z}).
inline DensityMatrix post_measurement_state(const GentlePovm& povm, const DensityMatrix& rho,
                                            const Outcome& z) {
  if (povm.dim() != rho.dim())
    throw std::invalid_argument("post_measurement_state: dimension mismatch");
  const CMatrix e = povm_element(povm, z);
  const double prob = (rho.matrix() * e).trace().real();
  if (prob <= tol::prob)
    throw std::domain_error("post_measurement_state: outcome probability below conditioning guard");
  const CMatrix root = sqrt_psd(e);
  CMatrix post = root * rho.matrix() * root;
  post = 0.5 * (post + post.adjoint().eval());
  return DensityMatrix(post / post.trace().real());
}

// ---------------------------------------------------------------------------
// Audits
// ---------------------------------------------------------------------------

/// Which outcomes and states an audit touches. Outcomes are enumerated
/// exhaustively whenever 2^D fits the cap; otherwise a deterministic sample
/// (all e_m, the all-zero and all-one patterns, plus uniformly random z).
struct AuditSpec {
  int haar_pure_states = 1000;
  int mixed_states = 0;
  std::uint32_t exhaustive_outcome_cap = 1u << 12;
  int sampled_outcomes = 256;
  bool include_extremal_states = true;
};

struct GentlenessReport {
  double max_distance = 0.0;
  double max_pure = 0.0;
  double max_mixed = 0.0;
  Outcome argmax_outcome;
};

struct PrivacyReport {
  double max_log_ratio = 0.0;
  double bound = 0.0;
  bool pass = false;
  Outcome argmax_outcome;
};

/// log(lambda_max / lambda_min) of one POVM element; +infinity when the
/// element is singular (rank-deficient operators cannot be private).
inline double privacy_log_ratio(const CMatrix& element) {
  const RVector lam = hermitian_eigenvalues(element);
  if (lam(0) <= 0.0) return std::numeric_limits<double>::infinity();
  return std::log(lam(lam.size() - 1) / lam(0));
}

namespace detail {

inline std::vector<Outcome> audit_outcomes(const GentlePovm& povm, const AuditSpec& spec, Rng& rng) {
  const int count = povm.count();
  std::vector<Outcome> zs;
  if (count <= 24 && (1u << count) <= spec.exhaustive_outcome_cap) {
    const std::uint32_t total = 1u << count;
    zs.reserve(total);
    for (std::uint32_t idx = 0; idx < total; ++idx) zs.push_back(Outcome::from_index(idx, count));
    return zs;
  }
  Outcome zero;
  zero.bits.assign(static_cast<std::size_t>(count), 0);
  zs.push_back(zero);
  Outcome ones;
  ones.bits.assign(static_cast<std::size_t>(count), 1);
  zs.push_back(ones);
  for (int m = 0; m < count; ++m) zs.push_back(Outcome::unit(count, m));
  for (int i = 0; i < spec.sampled_outcomes; ++i) {
    Outcome z;
    z.bits.resize(static_cast<std::size_t>(count));
    for (auto& b : z.bits) b = rng.bernoulli(0.5) ? 1 : 0;
    zs.push_back(std::move(z));
  }
  return zs;
}

struct ElementSpectral {
  Outcome z;
  CMatrix root;         // sqrt(E)
  CVector vec_min, vec_max;
  double s_min, s_max;  // extreme eigenvalues of sqrt(E)
};

inline std::vector<ElementSpectral> audit_elements(const GentlePovm& povm, const AuditSpec& spec,
                                                   Rng& rng) {
  std::vector<ElementSpectral> out;
  for (auto& z : audit_outcomes(povm, spec, rng)) {
    const CMatrix e = povm_element(povm, z);
    SpectralDecomp sd = spectral_decomp(e);
    const RVector roots = sd.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    ElementSpectral es;
    es.z = z;
    es.root = sd.eigenvectors * roots.asDiagonal() * sd.eigenvectors.adjoint();
    es.vec_min = sd.eigenvectors.col(0);
    es.vec_max = sd.eigenvectors.col(sd.eigenvectors.cols() - 1);
    es.s_min = roots(0);
    es.s_max = roots(roots.size() - 1);
    out.push_back(std::move(es));
  }
  return out;
}

/// Disturbance of a pure state under the positive root of one element. The
/// pure-state trace distance sqrt(1 - <M>^2/<M^2>) is evaluated through the
/// variance form ||(M - <M>) psi||^2 / <M^2>, which avoids the catastrophic
/// cancellation of the direct ratio near zero disturbance.
inline double pure_disturbance(const ElementSpectral& es, const CVector& psi) {
  const CVector mpsi = es.root * psi;
  const double prob = mpsi.squaredNorm();
  if (prob <= tol::prob) return 0.0;  // conditioning guard: outcome unreachable
  const double overlap = psi.dot(mpsi).real();
  const double variance = (mpsi - overlap * psi).squaredNorm();
  return std::sqrt(std::max(0.0, variance / prob));
}

}  // namespace detail

/// Maximizes trace_norm_dist(rho, rho_{M->z}) over sampled pure states
/// (plus the Kantorovich extremal state of every audited element), sampled
/// mixed states, and enumerated or sampled outcomes.
inline GentlenessReport gentleness_audit(const GentlePovm& povm, const AuditSpec& spec, Rng& rng) {
  const int d = povm.dim();
  GentlenessReport report;
  const auto elements = detail::audit_elements(povm, spec, rng);
  auto consider_pure = [&](const CVector& psi) {
    for (const auto& es : elements) {
      const double dist = detail::pure_disturbance(es, psi);
      if (dist > report.max_pure) {
        report.max_pure = dist;
        report.argmax_outcome = es.z;
      }
    }
  };
  for (int i = 0; i < spec.haar_pure_states; ++i)
    consider_pure(random_pure_state(d, rng).amplitudes());
  if (spec.include_extremal_states) {
    for (const auto& es : elements) {
      const double denom = es.s_min + es.s_max;
      if (denom <= 0.0) continue;
      CVector psi = (std::sqrt(es.s_max) * es.vec_min + std::sqrt(es.s_min) * es.vec_max) / std::sqrt(denom);
      psi /= psi.norm();
      consider_pure(psi);
    }
  }
  for (int i = 0; i < spec.mixed_states; ++i) {
    const DensityMatrix rho = random_density(d, rng);
    for (const auto& es : elements) {
      CMatrix post = es.root * rho.matrix() * es.root;
      const double prob = post.trace().real();
      if (prob <= tol::prob) continue;
      post = 0.5 * (post + post.adjoint().eval()) / prob;
      const RVector mu = hermitian_eigenvalues(rho.matrix() - post);
      const double dist = 0.5 * mu.cwiseAbs().sum();
      if (dist > report.max_mixed) {
        report.max_mixed = dist;
      }
    }
  }
  report.max_distance = std::max(report.max_pure, report.max_mixed);
  return report;
}

/// Max log eigenvalue ratio over audited elements; passes iff it stays below
/// delta (the qDP level the construction promises) plus slack.
inline PrivacyReport privacy_audit(const GentlePovm& povm, const AuditSpec& spec, Rng& rng) {
  PrivacyReport report;
  report.bound = povm.delta();
  for (auto& z : detail::audit_outcomes(povm, spec, rng)) {
    const double ratio = privacy_log_ratio(povm_element(povm, z));
    if (ratio > report.max_log_ratio) {
      report.max_log_ratio = ratio;
      report.argmax_outcome = z;
    }
  }
  report.pass = report.max_log_ratio <= report.bound + 1e-9;
  return report;
}

// ---------------------------------------------------------------------------
// Gentleness <-> quantum differential privacy conversions
// ---------------------------------------------------------------------------

enum class DualityDirection {
  QdpToGentle,          // alpha = tanh(delta/4), positive square-root implementation
  GentleToQdpPositive,  // delta = 4 artanh(alpha), positive-definite operators
  GentleToQdpGeneral,   // delta = 4 artanh(2 alpha), arbitrary implementation
  QdpToGentleGeneral,   // alpha = tanh(delta/4)/2, inverse of the general direction
};

inline double duality_convert(DualityDirection direction, double value) {
  switch (direction) {
    case DualityDirection::QdpToGentle:
      if (value < 0.0) throw std::domain_error("duality_convert: delta < 0");
      return std::tanh(value / 4.0);
    case DualityDirection::QdpToGentleGeneral:
      if (value < 0.0) throw std::domain_error("duality_convert: delta < 0");
      return 0.5 * std::tanh(value / 4.0);
    case DualityDirection::GentleToQdpPositive:
      if (!(value >= 0.0 && value < 1.0))
        throw std::domain_error("duality_convert: alpha outside [0, 1)");
      return 4.0 * std::atanh(value);
    case DualityDirection::GentleToQdpGeneral:
      if (!(value >= 0.0 && value < 0.5))
        throw std::domain_error("duality_convert: alpha outside [0, 1/2)");
      return 4.0 * std::atanh(2.0 * value);
  }
  throw std::logic_error("duality_convert: unknown direction");
}

// ---------------------------------------------------------------------------
// Kantorovich disturbance bound
// ---------------------------------------------------------------------------

struct KantorovichReport {
  double lhs = 0.0;            // 1 - <psi|M|psi>^2 / <psi|M^2|psi>
  double rhs = 0.0;            // ((l_max - l_min)/(l_max + l_min))^2
  bool holds = false;
  double extremal_lhs = 0.0;   // lhs evaluated at the extremal state
  double extremal_gap = 0.0;   // |extremal_lhs - rhs|
};

/// Checks the Kantorovich inequality for a positive-definite measurement
/// operator and a given pure state, and that the extremal state
/// (sqrt(l_d)|v_1> + sqrt(l_1)|v_d>)/sqrt(l_1 + l_d) attains equality.
inline KantorovichReport kantorovich_gentleness_bound(const CMatrix& matrix, const PureState& psi) {
  if (matrix.rows() != psi.dim())
    throw std::invalid_argument("kantorovich_gentleness_bound: dimension mismatch");
  SpectralDecomp sd = spectral_decomp(matrix);
  const double lo = sd.eigenvalues(0);
  const double hi = sd.eigenvalues(sd.eigenvalues.size() - 1);
  if (lo <= 0.0)
    throw std::invalid_argument("kantorovich_gentleness_bound: singular matrix");
  auto lhs_for = [&](const CVector& v) {
    const double num = (v.adjoint() * matrix * v)(0).real();
    const double den = (v.adjoint() * matrix * matrix * v)(0).real();
    return 1.0 - num * num / den;
  };
  KantorovichReport report;
  report.lhs = lhs_for(psi.amplitudes());
  const double ratio = (hi - lo) / (hi + lo);
  report.rhs = ratio * ratio;
  report.holds = report.lhs <= report.rhs + 1e-10;
  CVector extremal = (std::sqrt(hi) * sd.eigenvectors.col(0) +
                      std::sqrt(lo) * sd.eigenvectors.col(sd.eigenvectors.cols() - 1)) /
                     std::sqrt(lo + hi);
  extremal /= extremal.norm();
  report.extremal_lhs = lhs_for(extremal);
  report.extremal_gap = std::abs(report.extremal_lhs - report.rhs);
  return report;
}

}  // namespace gentlecert

#endif  // GENTLECERT_GENTLE_POVM_HPP
