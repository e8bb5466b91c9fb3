// SPDX-License-Identifier: Apache-2.0

#ifndef GENTLECERT_HARNESS_HPP
#define GENTLECERT_HARNESS_HPP

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "gentlecert/certify.hpp"
#include "gentlecert/lowerbound.hpp"
#include "gentlecert/serialize.hpp"
#include "gentlecert/superop.hpp"

namespace gentlecert {

// ---------------------------------------------------------------------------
// Alternative-state generators
// ---------------------------------------------------------------------------

enum class AltStateGen { FixedPure, RandomAdmissible, WorstCaseEigendirection };

inline std::string alt_gen_name(AltStateGen gen) {
  switch (gen) {
    case AltStateGen::FixedPure: return "fixed_pure";
    case AltStateGen::RandomAdmissible: return "random_admissible";
    case AltStateGen::WorstCaseEigendirection: return "worst_case_eigendirection";
  }
  return "?";
}

inline AltStateGen alt_gen_from_name(const std::string& name) {
  if (name == "fixed_pure") return AltStateGen::FixedPure;
  if (name == "random_admissible") return AltStateGen::RandomAdmissible;
  if (name == "worst_case_eigendirection" || name == "worst_case")
    return AltStateGen::WorstCaseEigendirection;
  throw std::invalid_argument("unknown alternative generator: " + name);
}

namespace detail {

/// Scales a traceless direction so the perturbed state sits at trace
/// distance epsilon from 1/d; returns nothing if positivity fails.
inline std::optional<DensityMatrix> state_at_distance(int d, const CMatrix& direction,
                                                      double epsilon) {
  const RVector mu = hermitian_eigenvalues(direction);
  const double dist = 0.5 * mu.cwiseAbs().sum();
  if (dist <= 0.0) return std::nullopt;
  const double scale = epsilon / dist;
  if (1.0 / d + scale * mu(0) < 0.0) return std::nullopt;
  CMatrix rho = CMatrix::Identity(d, d) / static_cast<double>(d) + scale * direction;
  return DensityMatrix(std::move(rho));
}

}  // namespace detail

/// Random admissible alternative: random signs over a random traceless
/// orthonormal direction set, rescaled to trace distance exactly epsilon;
/// re-drawn until the state is PSD.
inline DensityMatrix random_admissible_state(const HermitianBasis& basis, double epsilon,
                                             Rng& rng) {
  const int d = basis.dim();
  if (!(epsilon > 0.0 && epsilon <= 1.0 - 1.0 / d))
    throw std::invalid_argument("random_admissible_state: epsilon outside (0, 1 - 1/d]");
  const int count = (d * d + 1) / 2;
  for (int attempt = 0; attempt < 512; ++attempt) {
    const auto dirs = detail::random_traceless_directions(basis, count, rng);
    CMatrix direction = CMatrix::Zero(d, d);
    for (const auto& v : dirs) direction += (rng.bernoulli(0.5) ? 1.0 : -1.0) * v;
    if (auto rho = detail::state_at_distance(d, direction, epsilon)) return *rho;
  }
  throw std::runtime_error("random_admissible_state: no PSD state found at this epsilon");
}

/// Perturbation along the channel's least-sensitive traceless direction,
/// at trace distance epsilon. Needs the gentle POVM materializable (D <= 24).
inline DensityMatrix worst_case_state(const GentlePovm& povm, const HermitianBasis& basis,
                                      double epsilon) {
  const int d = povm.dim();
  if (povm.count() > 24)
    throw std::invalid_argument("worst_case_state: design too large to materialize the channel");
  SuperOpMatrix s;
  s.dim = d;
  s.matrix = RMatrix::Zero(basis.size(), basis.size());
  const std::uint32_t total = 1u << povm.count();
  for (std::uint32_t idx = 0; idx < total; ++idx) {
    const CMatrix e = povm_element(povm, Outcome::from_index(idx, povm.count()));
    const double tr = e.trace().real();
    const RVector c = basis.coefficients(e);
    s.matrix.noalias() += (c * c.transpose()) / tr;
  }
  const int traceless = basis.size() - 1;
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(s.matrix.topLeftCorner(traceless, traceless));
  RVector full = RVector::Zero(basis.size());
  full.head(traceless) = solver.eigenvectors().col(0);
  const CMatrix direction = basis.reconstruct(full);
  auto rho = detail::state_at_distance(d, direction, epsilon);
  if (!rho)
    throw std::runtime_error("worst_case_state: eigendirection admits no PSD state at epsilon");
  return *rho;
}

inline DensityMatrix make_alternative_state(AltStateGen gen, const GentlePovm& povm,
                                            const HermitianBasis& basis, double epsilon,
                                            Rng& rng) {
  switch (gen) {
    case AltStateGen::FixedPure: {
      CVector e0 = CVector::Zero(povm.dim());
      e0(0) = 1.0;
      return DensityMatrix(PureState(e0));
    }
    case AltStateGen::RandomAdmissible:
      return random_admissible_state(basis, epsilon, rng);
    case AltStateGen::WorstCaseEigendirection:
      return worst_case_state(povm, basis, epsilon);
  }
  throw std::logic_error("make_alternative_state: unknown generator");
}

// ---------------------------------------------------------------------------
// Sweep configuration and records
// ---------------------------------------------------------------------------

struct SweepConfig {
  std::vector<int> dims;
  std::vector<double> alphas;
  std::vector<double> epsilons;
  std::vector<std::int64_t> sample_sizes;  // explicit n list; empty -> constant rule
  double sample_constant = 2.0;            // n = C d^3 / (eps^2 alpha^2)
  int trials = 100;
  AltStateGen alt_generator = AltStateGen::RandomAdmissible;
  std::uint64_t base_seed = 1;
  std::string output_path;

  void validate() const {
    if (dims.empty() || alphas.empty() || epsilons.empty())
      throw std::invalid_argument("sweep config: dims, alphas and epsilons must be nonempty");
    for (int d : dims)
      if (!mub_dimension_supported(d))
        throw std::invalid_argument("sweep config: dimension " + std::to_string(d) +
                                    " not supported; " + mub_supported_dims_message());
    for (double a : alphas)
      if (!(a > 0.0 && a < 0.5))
        throw std::invalid_argument("sweep config: alpha outside (0, 1/2)");
    for (double e : epsilons)
      if (!(e > 0.0 && e < 1.0))
        throw std::invalid_argument("sweep config: epsilon outside (0, 1)");
    if (trials < 1) throw std::invalid_argument("sweep config: trials < 1");
    if (sample_sizes.empty() && !(sample_constant > 0.0))
      throw std::invalid_argument("sweep config: sample_constant must be positive");
    for (std::int64_t n : sample_sizes)
      if (n < 2) throw std::invalid_argument("sweep config: sample sizes must be >= 2");
  }

  std::vector<std::int64_t> sizes_for(int d, double alpha, double epsilon) const {
    if (!sample_sizes.empty()) return sample_sizes;
    const double n = sample_constant * d * d * d / (epsilon * epsilon * alpha * alpha);
    return {std::max<std::int64_t>(2, static_cast<std::int64_t>(std::llround(n)))};
  }
};

/// One persisted trial: cell coordinates, truth label, and the test outcome.
struct TrialRecord {
  int d = 0;
  int design_count = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
  std::int64_t n = 0;
  int trial = 0;
  bool null_case = true;
  std::uint64_t seed = 0;
  double truth_distance = 0.0;
  double statistic = 0.0;
  double threshold = 0.0;
  bool reject = false;
  double wall_ms = 0.0;
};

inline json record_to_json(const TrialRecord& r) {
  return json{{"d", r.d},
              {"D", r.design_count},
              {"alpha", r.alpha},
              {"epsilon", r.epsilon},
              {"n", r.n},
              {"trial", r.trial},
              {"label", r.null_case ? "null" : "alt"},
              {"seed", r.seed},
              {"truth_distance", r.truth_distance},
              {"statistic", r.statistic},
              {"threshold", r.threshold},
              {"reject", r.reject},
              {"wall_ms", r.wall_ms}};
}

inline TrialRecord record_from_json(const json& j) {
  TrialRecord r;
  r.d = j.at("d").get<int>();
  r.design_count = j.at("D").get<int>();
  r.alpha = j.at("alpha").get<double>();
  r.epsilon = j.at("epsilon").get<double>();
  r.n = j.at("n").get<std::int64_t>();
  r.trial = j.at("trial").get<int>();
  r.null_case = j.at("label").get<std::string>() == "null";
  r.seed = j.at("seed").get<std::uint64_t>();
  r.truth_distance = j.at("truth_distance").get<double>();
  r.statistic = j.at("statistic").get<double>();
  r.threshold = j.at("threshold").get<double>();
  r.reject = j.at("reject").get<bool>();
  r.wall_ms = j.at("wall_ms").get<double>();
  return r;
}

inline std::vector<TrialRecord> load_records(const std::string& path) {
  std::vector<TrialRecord> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(record_from_json(json::parse(line)));
  }
  return records;
}

inline void append_records(const std::string& path, const std::vector<TrialRecord>& records) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("append_records: cannot open " + path);
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
}

// ---------------------------------------------------------------------------
// Sweep execution
// ---------------------------------------------------------------------------

namespace detail {

using TrialKey = std::tuple<int, std::uint64_t, std::uint64_t, std::int64_t, int, bool>;

inline TrialKey key_of(int d, double alpha, double epsilon, std::int64_t n, int trial,
                       bool null_case) {
  return {d, std::bit_cast<std::uint64_t>(alpha), std::bit_cast<std::uint64_t>(epsilon), n, trial,
          null_case};
}

inline TrialKey key_of(const TrialRecord& r) {
  return key_of(r.d, r.alpha, r.epsilon, r.n, r.trial, r.null_case);
}

inline std::uint64_t trial_stream(std::uint64_t base_seed, int d, double alpha, double epsilon,
                                  std::int64_t n, int trial, bool null_case) {
  return mix_seed(base_seed, static_cast<std::uint64_t>(d), std::bit_cast<std::uint64_t>(alpha),
                  std::bit_cast<std::uint64_t>(epsilon), static_cast<std::uint64_t>(n),
                  static_cast<std::uint64_t>(trial), null_case ? 1ULL : 0ULL);
}

}  // namespace detail

/// Runs one seeded trial of a sweep cell and fills a record. The alternative
/// state (when not the null run) is drawn from a sub-stream of the trial
/// stream, so records are reproducible independent of scheduling.
inline TrialRecord run_trial(const GentlePovm& povm, const HermitianBasis& basis,
                             const DensityMatrix& rho0, double epsilon, std::int64_t n, int trial,
                             bool null_case, AltStateGen gen, std::uint64_t base_seed) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord r;
  r.d = povm.dim();
  r.design_count = povm.count();
  r.alpha = povm.alpha();
  r.epsilon = epsilon;
  r.n = n;
  r.trial = trial;
  r.null_case = null_case;
  r.seed = detail::trial_stream(base_seed, r.d, r.alpha, epsilon, n, trial, null_case);
  Rng state_rng(base_seed, mix_seed(r.seed, 0x5747u));
  const DensityMatrix rho_true =
      null_case ? rho0 : make_alternative_state(gen, povm, basis, epsilon, state_rng);
  r.truth_distance = trace_norm_dist(rho_true, rho0);
  Rng measure_rng(base_seed, mix_seed(r.seed, 0x6D65u));
  const TestResult result = run_certification(povm, rho_true, rho0, n, epsilon, measure_rng);
  r.statistic = result.statistic;
  r.threshold = result.threshold;
  r.reject = result.reject;
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Runs every (cell, trial, label) of the config, appending records to the
/// output path cell by cell. Keys already present in the output are skipped,
/// so an interrupted sweep resumes where it stopped.
inline std::vector<TrialRecord> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  std::set<detail::TrialKey> done;
  std::vector<TrialRecord> all;
  if (!cfg.output_path.empty()) {
    all = load_records(cfg.output_path);
    for (const auto& r : all) done.insert(detail::key_of(r));
  }
  std::map<int, TwoDesign> designs;
  for (int d : cfg.dims)
    if (!designs.count(d)) designs.emplace(d, build_mub_design(d));
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  for (int d : cfg.dims) {
    const TwoDesign& design = designs.at(d);
    const HermitianBasis basis(d);
    const DensityMatrix rho0 = maximally_mixed(d);
    for (double alpha : cfg.alphas) {
      const GentlePovm povm(design, alpha);
      for (double epsilon : cfg.epsilons) {
        for (std::int64_t n : cfg.sizes_for(d, alpha, epsilon)) {
          struct Job {
            int trial;
            bool null_case;
          };
          std::vector<Job> jobs;
          for (int t = 0; t < cfg.trials; ++t)
            for (bool null_case : {true, false})
              if (!done.count(detail::key_of(d, alpha, epsilon, n, t, null_case)))
                jobs.push_back({t, null_case});
          if (jobs.empty()) continue;
          std::vector<TrialRecord> cell(jobs.size());
          const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(jobs.size()));
          std::vector<std::thread> pool;
          for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
              for (std::size_t i = w; i < jobs.size(); i += workers)
                cell[i] = run_trial(povm, basis, rho0, epsilon, n, jobs[i].trial,
                                    jobs[i].null_case, cfg.alt_generator, cfg.base_seed);
            });
          for (auto& th : pool) th.join();
          if (!cfg.output_path.empty()) append_records(cfg.output_path, cell);
          for (auto& r : cell) {
            done.insert(detail::key_of(r));
            all.push_back(std::move(r));
          }
        }
      }
    }
  }
  return all;
}

// ---------------------------------------------------------------------------
// Summaries
// ---------------------------------------------------------------------------

/// Wilson score interval at 95% for a binomial proportion.
inline std::pair<double, double> wilson_interval(int successes, int trials) {
  if (trials <= 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  const double n = trials;
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

struct CellSummary {
  int d = 0;
  int design_count = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
  std::int64_t n = 0;
  int null_trials = 0;
  int alt_trials = 0;
  double type1 = 0.0;
  double type2 = 0.0;
  double total = 0.0;
  double ci_low = 0.0;   // sum of per-rate Wilson lower bounds
  double ci_high = 0.0;  // sum of per-rate Wilson upper bounds
};

inline std::vector<CellSummary> summarize(const std::vector<TrialRecord>& records) {
  if (records.empty()) throw std::invalid_argument("summarize: no records");
  std::map<std::tuple<int, double, double, std::int64_t>, CellSummary> cells;
  std::map<std::tuple<int, double, double, std::int64_t>, std::pair<int, int>> errors;
  for (const auto& r : records) {
    const auto key = std::make_tuple(r.d, r.alpha, r.epsilon, r.n);
    auto& cell = cells[key];
    cell.d = r.d;
    cell.design_count = r.design_count;
    cell.alpha = r.alpha;
    cell.epsilon = r.epsilon;
    cell.n = r.n;
    auto& err = errors[key];
    if (r.null_case) {
      ++cell.null_trials;
      if (r.reject) ++err.first;
    } else {
      ++cell.alt_trials;
      if (!r.reject) ++err.second;
    }
  }
  std::vector<CellSummary> out;
  for (auto& [key, cell] : cells) {
    const auto [false_rejects, false_accepts] = errors[key];
    cell.type1 = cell.null_trials ? static_cast<double>(false_rejects) / cell.null_trials : 0.0;
    cell.type2 = cell.alt_trials ? static_cast<double>(false_accepts) / cell.alt_trials : 0.0;
    cell.total = cell.type1 + cell.type2;
    const auto w1 = wilson_interval(false_rejects, cell.null_trials);
    const auto w2 = wilson_interval(false_accepts, cell.alt_trials);
    cell.ci_low = w1.first + w2.first;
    cell.ci_high = w1.second + w2.second;
    out.push_back(cell);
  }
  return out;
}

inline std::string summaries_to_csv(const std::vector<CellSummary>& summaries) {
  std::ostringstream out;
  out << "d,D,alpha,epsilon,n,trials,type1,type2,total,ci_low,ci_high\n";
  out.precision(12);
  for (const auto& s : summaries)
    out << s.d << ',' << s.design_count << ',' << s.alpha << ',' << s.epsilon << ',' << s.n << ','
        << s.null_trials << ',' << s.type1 << ',' << s.type2 << ',' << s.total << ',' << s.ci_low
        << ',' << s.ci_high << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Scaling analysis
// ---------------------------------------------------------------------------

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

/// Least-squares slope of log n* against log d.
inline ScalingFit scaling_fit(const std::vector<std::pair<double, double>>& d_to_n) {
  std::set<double> distinct;
  for (const auto& p : d_to_n) distinct.insert(p.first);
  if (distinct.size() < 3) throw std::invalid_argument("scaling_fit: need at least 3 distinct d");
  const int m = static_cast<int>(d_to_n.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [d, n] : d_to_n) {
    const double x = std::log(d);
    const double y = std::log(n);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  ScalingFit fit;
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / m;
  for (const auto& [d, n] : d_to_n)
    fit.max_residual =
        std::max(fit.max_residual, std::abs(std::log(n) - fit.slope * std::log(d) - fit.intercept));
  return fit;
}

struct ErrorRates {
  double type1 = 0.0;
  double type2 = 0.0;
  int trials = 0;
  double total() const { return type1 + type2; }
};

/// Empirical type-I/type-II rates of the certification test at one cell,
/// trials split across hardware threads with per-trial streams.
inline ErrorRates measure_error_rates(const TwoDesign& design, double alpha, double epsilon,
                                      std::int64_t n, int trials, std::uint64_t base_seed,
                                      AltStateGen gen = AltStateGen::RandomAdmissible) {
  const GentlePovm povm(design, alpha);
  const HermitianBasis basis(design.dim());
  const DensityMatrix rho0 = maximally_mixed(design.dim());
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
  std::vector<int> false_rejects(workers, 0), false_accepts(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w]() {
      for (int t = static_cast<int>(w); t < trials; t += static_cast<int>(workers)) {
        for (bool null_case : {true, false}) {
          const TrialRecord r = run_trial(povm, basis, rho0, epsilon, n, t, null_case, gen, base_seed);
          if (null_case && r.reject) ++false_rejects[w];
          if (!null_case && !r.reject) ++false_accepts[w];
        }
      }
    });
  for (auto& th : pool) th.join();
  ErrorRates rates;
  rates.trials = trials;
  for (unsigned w = 0; w < workers; ++w) {
    rates.type1 += false_rejects[w];
    rates.type2 += false_accepts[w];
  }
  rates.type1 /= trials;
  rates.type2 /= trials;
  return rates;
}

/// Minimal n at which the summed error drops to `target`, by exponential
/// search then bisection. Monte Carlo noise at the boundary is inherent; the
/// caller picks `trials` accordingly.
inline std::int64_t min_sample_for_error(const TwoDesign& design, double alpha, double epsilon,
                                         double target, int trials, std::uint64_t base_seed,
                                         AltStateGen gen = AltStateGen::RandomAdmissible) {
  std::int64_t lo = 2, hi = 64;
  while (true) {
    const ErrorRates rates = measure_error_rates(design, alpha, epsilon, hi, trials, base_seed, gen);
    if (rates.total() <= target) break;
    lo = hi;
    hi *= 2;
    if (hi > (1LL << 26))
      throw std::runtime_error("min_sample_for_error: target error not reached");
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (mid == lo) break;
    const ErrorRates rates = measure_error_rates(design, alpha, epsilon, mid, trials, base_seed, gen);
    if (rates.total() <= target)
      hi = mid;
    else
      lo = mid;
    if (hi - lo < std::max<std::int64_t>(2, hi / 64)) break;  // noise floor: stop at ~1.5% width
  }
  return hi;
}

/// Calibrated constant C with n* = C d^3 / (eps^2 alpha^2).
inline double calibrate_constant(const TwoDesign& design, double alpha, double epsilon,
                                 double target, int trials, std::uint64_t base_seed) {
  const std::int64_t n = min_sample_for_error(design, alpha, epsilon, target, trials, base_seed);
  const int d = design.dim();
  return static_cast<double>(n) * epsilon * epsilon * alpha * alpha / (static_cast<double>(d) * d * d);
}

// ---------------------------------------------------------------------------
// Config file parsing (key = value lines; lists in brackets)
// ---------------------------------------------------------------------------

namespace detail {

inline std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_list(const std::string& value) {
  std::string inner = strip(value);
  if (inner.size() < 2 || inner.front() != '[' || inner.back() != ']')
    throw std::invalid_argument("sweep config: expected a [..] list, got: " + value);
  inner = inner.substr(1, inner.size() - 2);
  std::vector<std::string> items;
  std::string item;
  std::istringstream stream(inner);
  while (std::getline(stream, item, ',')) {
    item = strip(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace detail

/// Parses the sweep config format documented in the README: one `key = value`
/// per line, `#` comments, numeric lists in brackets.
inline SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("sweep config line " + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = detail::strip(line.substr(0, eq));
    const std::string value = detail::strip(line.substr(eq + 1));
    try {
      if (key == "dims") {
        cfg.dims.clear();
        for (const auto& v : detail::split_list(value)) cfg.dims.push_back(std::stoi(v));
      } else if (key == "alphas") {
        cfg.alphas.clear();
        for (const auto& v : detail::split_list(value)) cfg.alphas.push_back(std::stod(v));
      } else if (key == "epsilons") {
        cfg.epsilons.clear();
        for (const auto& v : detail::split_list(value)) cfg.epsilons.push_back(std::stod(v));
      } else if (key == "ns") {
        cfg.sample_sizes.clear();
        for (const auto& v : detail::split_list(value)) cfg.sample_sizes.push_back(std::stoll(v));
      } else if (key == "sample_constant") {
        cfg.sample_constant = std::stod(value);
      } else if (key == "trials") {
        cfg.trials = std::stoi(value);
      } else if (key == "alt_generator") {
        cfg.alt_generator = alt_gen_from_name(value);
      } else if (key == "base_seed") {
        cfg.base_seed = std::stoull(value);
      } else if (key == "output") {
        cfg.output_path = value;
      } else {
        throw std::invalid_argument("unknown key: " + key);
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception& e) {
      throw std::invalid_argument("sweep config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

inline SweepConfig parse_sweep_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sweep config: " + path);
  return parse_sweep_config(in);
}

}  // namespace gentlecert

#endif  // GENTLECERT_HARNESS_HPP
