// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_CERTIFY_HPP
#define GENTLECERT_CERTIFY_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gentlecert/gentle_povm.hpp"
#include "gentlecert/rng.hpp"
#include "gentlecert/states.hpp"
#include "gentlecert/two_design.hpp"

namespace gentlecert {

/// Column sums of n outcome bit vectors: N_m counts how often bit m was set.
struct CountVector {
  std::vector<std::int64_t> counts;
  std::int64_t n = 0;
};

/// `count` fixes the expected bit-vector length; -1 infers it from the first
/// outcome (an empty input then yields an empty count vector).
inline CountVector counts_from_outcomes(const std::vector<Outcome>& outcomes, int count = -1) {
  CountVector cv;
  if (count < 0) count = outcomes.empty() ? 0 : outcomes.front().size();
  cv.counts.assign(static_cast<std::size_t>(count), 0);
  for (const auto& z : outcomes) {
    if (z.size() != count)
      throw std::invalid_argument("counts_from_outcomes: inconsistent outcome lengths");
    for (int m = 0; m < count; ++m) cv.counts[static_cast<std::size_t>(m)] += z.bits[static_cast<std::size_t>(m)];
    ++cv.n;
  }
  return cv;
}

/// The collision statistic
///   T_n = sum_m [ (N_m - n q0(m))^2 - N_m (1 - 2 q0(m)) - n q0(m)^2 ],
/// with q0(m) = alpha p0(m) + beta the null marginal of the randomized bits.
/// Unbiased: E[T_n] = n(n-1) alpha^2 ||p_rho - p0||_2^2.
inline double statistic_tn(const CountVector& counts, double alpha, const std::vector<double>& p0) {
  if (counts.n < 2) throw std::invalid_argument("statistic_tn: n < 2");
  if (p0.size() != counts.counts.size())
    throw std::invalid_argument("statistic_tn: null distribution size mismatch");
  double sum_p0 = 0.0;
  for (double p : p0) sum_p0 += p;
  if (std::abs(sum_p0 - 1.0) > 1e-10)
    throw std::invalid_argument("statistic_tn: null distribution does not sum to one");
  const double delta = 4.0 * std::atanh(alpha);
  const double beta = 1.0 / (std::exp(delta / 2.0) + 1.0);
  const double n = static_cast<double>(counts.n);
  double t = 0.0;
  for (std::size_t m = 0; m < p0.size(); ++m) {
    const double q0 = alpha * p0[m] + beta;
    const double nm = static_cast<double>(counts.counts[m]);
    const double centered = nm - n * q0;
    t += centered * centered - nm * (1.0 - 2.0 * q0) - n * q0 * q0;
  }
  return t;
}

/// Rejection threshold c = n(n-1) alpha^2 epsilon^2 / (2 D d).
inline double threshold(std::int64_t n, double alpha, double epsilon, int design_count, int dim) {
  if (n < 2) throw std::invalid_argument("threshold: n < 2");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("threshold: epsilon outside (0, 1]");
  if (!(alpha > 0.0 && alpha <= 0.5)) throw std::invalid_argument("threshold: alpha outside (0, 1/2]");
  if (design_count < 1 || dim < 1) throw std::invalid_argument("threshold: bad design size");
  return static_cast<double>(n) * static_cast<double>(n - 1) * alpha * alpha * epsilon * epsilon /
         (2.0 * design_count * dim);
}

struct TestResult {
  double statistic = 0.0;
  double threshold = 0.0;
  bool reject = false;
};

/// One certification run: n gentle-measurement outcomes of rho_true, counted
/// and tested against the null rho0 at separation epsilon.
inline TestResult run_certification(const GentlePovm& povm, const DensityMatrix& rho_true,
                                    const DensityMatrix& rho0, std::int64_t n, double epsilon,
                                    Rng& rng) {
  if (rho_true.dim() != povm.dim() || rho0.dim() != povm.dim())
    throw std::invalid_argument("run_certification: dimension mismatch");
  if (n < 2) throw std::invalid_argument("run_certification: n < 2");
  const OutcomeSampler sampler = make_sampler(povm, rho_true);
  CountVector cv;
  cv.counts.assign(static_cast<std::size_t>(povm.count()), 0);
  std::vector<std::uint8_t> bits;
  for (std::int64_t i = 0; i < n; ++i) {
    sampler.sample_into(rng, bits);
    for (std::size_t m = 0; m < bits.size(); ++m) cv.counts[m] += bits[m];
  }
  cv.n = n;
  const std::vector<double> p0 = design_probabilities(povm.design(), rho0);
  TestResult result;
  result.statistic = statistic_tn(cv, povm.alpha(), p0);
  result.threshold = threshold(n, povm.alpha(), epsilon, povm.count(), povm.dim());
  result.reject = result.statistic > result.threshold;
  return result;
}

}  // namespace gentlecert

#endif  // GENTLECERT_CERTIFY_HPP
