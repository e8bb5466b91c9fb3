// SPDX-License-Identifier: Apache-2.0

// Command-line front end: design verification, POVM audits, single
// certification runs, channel analysis, batch sweeps and scaling fits.
// Exit codes: 0 success/pass, 1 check failure (or certification reject),
// 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gentlecert/gentlecert.hpp"

namespace gc = gentlecert;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

gc::DensityMatrix load_state(const std::string& spec, int dim) {
  if (spec == "mixed") return gc::maximally_mixed(dim);
  if (spec == "pure0") {
    gc::CVector e0 = gc::CVector::Zero(dim);
    e0(0) = 1.0;
    return gc::DensityMatrix(gc::PureState(e0));
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open state file: " + spec);
  gc::json j;
  in >> j;
  gc::DensityMatrix rho = gc::density_from_json(j);
  if (rho.dim() != dim) throw std::invalid_argument("state file dimension does not match --dim");
  return rho;
}

int cmd_verify_design(int dim, const std::string& in_path, const std::string& out_path, int trials,
                      std::uint64_t seed) {
  gc::TwoDesign design =
      in_path.empty() ? gc::build_mub_design(dim)
                      : [&] {
                          std::ifstream in(in_path);
                          if (!in) throw std::invalid_argument("cannot open design file: " + in_path);
                          gc::json j;
                          in >> j;
                          // imported candidates are verified, not trusted
                          return gc::design_from_json(j, gc::TwoDesign::Validate::None);
                        }();
  gc::Rng rng(seed, 0);
  const gc::DesignVerification report = gc::verify_two_design(design, trials, rng);
  std::cout << "dim " << design.dim() << "  vectors " << design.count() << "\n"
            << "max moment residual " << report.max_moment_residual << "\n"
            << "max frame residual  " << report.max_frame_residual << "\n"
            << (report.pass ? "PASS" : "FAIL") << " (tolerance " << gc::tol::design << ")\n";
  if (!out_path.empty()) write_text_file(out_path, gc::design_to_json(design).dump(2) + "\n");
  return report.pass ? kExitPass : kExitCheckFailed;
}

int cmd_audit_povm(int dim, double alpha, bool exact, int states, std::uint64_t seed,
                   const std::string& out_path) {
  const gc::GentlePovm povm(gc::build_mub_design(dim), alpha);
  std::cout << "dim " << dim << "  D " << povm.count() << "  alpha " << alpha << "  delta "
            << povm.delta() << "\n";
  const double analytic = gc::completeness_check(povm, gc::CompletenessMode::Analytic);
  std::cout << "completeness (analytic) residual " << analytic << "\n";
  bool pass = analytic <= 1e-12;
  if (exact) {
    const double exact_res = gc::completeness_check(povm, gc::CompletenessMode::Exact);
    std::cout << "completeness (exact)    residual " << exact_res << "\n";
    pass = pass && exact_res <= 1e-10;
  }
  gc::AuditSpec spec;
  spec.haar_pure_states = states;
  spec.mixed_states = states / 10;
  gc::Rng grng(seed, 1);
  const gc::GentlenessReport gentle = gc::gentleness_audit(povm, spec, grng);
  std::cout << "gentleness max distance " << gentle.max_distance << " (bound alpha = " << alpha
            << ", argmax z = " << gentle.argmax_outcome.to_string() << ")\n";
  pass = pass && gentle.max_distance <= alpha + 1e-9;
  gc::Rng prng(seed, 2);
  const gc::PrivacyReport privacy = gc::privacy_audit(povm, spec, prng);
  std::cout << "privacy max log-ratio " << privacy.max_log_ratio << " (bound delta = "
            << privacy.bound << ")\n";
  pass = pass && privacy.pass;
  if (!out_path.empty()) write_text_file(out_path, gc::povm_to_json(povm).dump(2) + "\n");
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_certify(int dim, double alpha, double epsilon, std::int64_t n, const std::string& state,
                std::uint64_t seed, const std::string& outcomes_path, const std::string& out_path) {
  const gc::GentlePovm povm(gc::build_mub_design(dim), alpha);
  const gc::DensityMatrix rho_true = load_state(state, dim);
  const gc::DensityMatrix rho0 = gc::maximally_mixed(dim);
  gc::Rng rng(seed, 0);
  gc::TestResult result;
  if (!outcomes_path.empty()) {
    // keep the drawn outcomes around as a bitstring stream
    const gc::OutcomeSampler sampler = gc::make_sampler(povm, rho_true);
    std::vector<gc::Outcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) outcomes.push_back(sampler.sample(rng));
    gc::write_outcomes_file(outcomes_path, outcomes);
    const gc::CountVector counts = gc::counts_from_outcomes(outcomes, povm.count());
    const auto p0 = gc::design_probabilities(povm.design(), rho0);
    result.statistic = gc::statistic_tn(counts, povm.alpha(), p0);
    result.threshold = gc::threshold(n, povm.alpha(), epsilon, povm.count(), dim);
    result.reject = result.statistic > result.threshold;
  } else {
    result = gc::run_certification(povm, rho_true, rho0, n, epsilon, rng);
  }
  const gc::json row{{"d", dim},
                     {"D", povm.count()},
                     {"alpha", alpha},
                     {"epsilon", epsilon},
                     {"n", n},
                     {"seed", seed},
                     {"statistic", result.statistic},
                     {"threshold", result.threshold},
                     {"reject", result.reject},
                     {"truth_distance", gc::trace_norm_dist(rho_true, rho0)}};
  std::cout << row.dump() << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << row.dump() << "\n";
  }
  return result.reject ? kExitCheckFailed : kExitPass;
}

int cmd_analyze_superop(int dim, double alpha, const std::string& out_path, int trials,
                        std::uint64_t seed) {
  const gc::GentlePovm povm(gc::build_mub_design(dim), alpha);
  if (povm.count() > 24)
    throw std::invalid_argument("analyze-superop: 2^D element enumeration needs D <= 24");
  const gc::HermitianBasis basis(dim);
  const gc::ExplicitPovm explicit_povm(gc::materialize_elements(povm));
  const gc::SuperOpMatrix s = gc::superop_from_povm(explicit_povm, basis);
  gc::Rng rng(seed, 3);
  const gc::ChannelPropertyReport channel =
      gc::verify_channel_properties(s, explicit_povm, basis, trials, rng);
  const gc::EigenvalueSumReport sum = gc::eigenvalue_sum_check(s, alpha);
  std::cout << "eigenvalues:";
  for (int i = 0; i < s.eigenvalues.size(); ++i) std::cout << ' ' << s.eigenvalues(i);
  std::cout << "\nself-adjoint residual " << channel.self_adjoint_residual
            << "\nmin eigenvalue        " << channel.min_eigenvalue
            << "\ntrace residual        " << channel.trace_residual
            << "\nunital residual       " << channel.unital_residual
            << "\ntraceless eigen sum   " << sum.traceless_sum << " (bound " << sum.bound << ")\n";
  if (!out_path.empty()) write_text_file(out_path, gc::superop_to_json(s).dump(2) + "\n");
  const bool pass = channel.pass && sum.pass;
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_sweep(const std::string& config_path, const std::string& out_override) {
  gc::SweepConfig cfg = gc::parse_sweep_config_file(config_path);
  if (!out_override.empty()) cfg.output_path = out_override;
  cfg.validate();
  const auto records = gc::run_sweep(cfg);
  const auto summaries = gc::summarize(records);
  std::cout << gc::summaries_to_csv(summaries);
  return kExitPass;
}

int cmd_scaling(const std::string& in_path, const std::string& out_path, double target) {
  const auto records = gc::load_records(in_path);
  if (records.empty()) throw std::invalid_argument("scaling: no records in " + in_path);
  const auto summaries = gc::summarize(records);
  // smallest n reaching the target error, per dimension
  std::map<int, std::int64_t> min_n;
  for (const auto& s : summaries)
    if (s.total <= target && (!min_n.count(s.d) || s.n < min_n[s.d])) min_n[s.d] = s.n;
  std::vector<std::pair<double, double>> points;
  for (const auto& [d, n] : min_n) {
    std::cout << "d " << d << "  minimal n " << n << "\n";
    points.emplace_back(static_cast<double>(d), static_cast<double>(n));
  }
  const gc::ScalingFit fit = gc::scaling_fit(points);
  std::cout << "slope " << fit.slope << "  intercept " << fit.intercept << "  max residual "
            << fit.max_residual << "\n";
  if (!out_path.empty()) write_text_file(out_path, gc::summaries_to_csv(summaries));
  return kExitPass;
}

int cmd_calibrate(int dim, double alpha, double epsilon, double target, int trials,
                  std::uint64_t seed) {
  const gc::TwoDesign design = gc::build_mub_design(dim);
  const std::int64_t n = gc::min_sample_for_error(design, alpha, epsilon, target, trials, seed);
  const double c = static_cast<double>(n) * epsilon * epsilon * alpha * alpha /
                   (static_cast<double>(dim) * dim * dim);
  std::cout << "minimal n " << n << "\ncalibrated C " << c << "  (n = C d^3 / (eps^2 alpha^2))\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gentlecert: gentle 2-design state certification toolkit"};
  app.require_subcommand(1);

  int dim = 2;
  double alpha = 0.1, epsilon = 0.3, target = 1.0 / 3.0;
  std::int64_t n = 1000;
  int trials = 100, states = 500;
  std::uint64_t seed = 1;
  std::string in_path, out_path, config_path, state_spec = "mixed", outcomes_path;
  bool exact = false;

  auto* verify = app.add_subcommand("verify-design", "verify the 2-design moment identities");
  verify->add_option("--dim", dim, "dimension")->required();
  verify->add_option("--in", in_path, "verify a design JSON file instead of the built-in MUBs");
  verify->add_option("--out", out_path, "export the design as JSON");
  verify->add_option("--trials", trials, "random test matrices");
  verify->add_option("--seed", seed, "rng seed");

  auto* audit = app.add_subcommand("audit-povm", "completeness, gentleness and privacy audits");
  audit->add_option("--dim", dim, "dimension")->required();
  audit->add_option("--alpha", alpha, "gentleness parameter in [0, 1/2)")->required();
  audit->add_flag("--exact", exact, "also enumerate all 2^D outcomes (D <= 24)");
  audit->add_option("--states", states, "audited Haar states");
  audit->add_option("--seed", seed, "rng seed");
  audit->add_option("--out", out_path, "write the POVM descriptor JSON");

  auto* certify = app.add_subcommand("certify", "run the certification test once");
  certify->add_option("--dim", dim, "dimension")->required();
  certify->add_option("--alpha", alpha, "gentleness parameter")->required();
  certify->add_option("--epsilon", epsilon, "separation")->required();
  certify->add_option("--n", n, "number of copies (>= 2)")->required();
  certify->add_option("--state", state_spec, "true state: file path, 'mixed' or 'pure0'");
  certify->add_option("--seed", seed, "rng seed");
  certify->add_option("--record-outcomes", outcomes_path, "persist outcome bitstrings");
  certify->add_option("--out", out_path, "append the result JSON row");

  auto* analyze = app.add_subcommand("analyze-superop", "measurement channel spectral analysis");
  analyze->add_option("--dim", dim, "dimension")->required();
  analyze->add_option("--alpha", alpha, "gentleness parameter")->required();
  analyze->add_option("--out", out_path, "write the channel matrix JSON")->required();
  analyze->add_option("--trials", trials, "random matrices for the channel checks");
  analyze->add_option("--seed", seed, "rng seed");

  auto* sweep = app.add_subcommand("sweep", "run a seeded sweep from a config file");
  sweep->add_option("--config", config_path, "sweep config file")->required();
  sweep->add_option("--out", out_path, "override the config output path");

  auto* scaling = app.add_subcommand("scaling", "fit the sample-size scaling exponent");
  scaling->add_option("--in", in_path, "records NDJSON")->required();
  scaling->add_option("--out", out_path, "write per-cell summary CSV");
  scaling->add_option("--target", target, "error level defining minimal n");

  auto* calibrate = app.add_subcommand("calibrate", "bisect the sample-size constant C");
  calibrate->add_option("--dim", dim, "dimension")->required();
  calibrate->add_option("--alpha", alpha, "gentleness parameter")->required();
  calibrate->add_option("--epsilon", epsilon, "separation")->required();
  calibrate->add_option("--target", target, "target total error");
  calibrate->add_option("--trials", trials, "trials per bisection step");
  calibrate->add_option("--seed", seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify_design(dim, in_path, out_path, trials, seed);
    if (audit->parsed()) return cmd_audit_povm(dim, alpha, exact, states, seed, out_path);
    if (certify->parsed()) {
      if (n < 2) throw std::invalid_argument("certify: n must be at least 2");
      return cmd_certify(dim, alpha, epsilon, n, state_spec, seed, outcomes_path, out_path);
    }
    if (analyze->parsed()) return cmd_analyze_superop(dim, alpha, out_path, trials, seed);
    if (sweep->parsed()) return cmd_sweep(config_path, out_path);
    if (scaling->parsed()) return cmd_scaling(in_path, out_path, target);
    if (calibrate->parsed()) return cmd_calibrate(dim, alpha, epsilon, target, trials, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
