// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "gentlecert/gentle_povm.hpp"
#include "gentlecert/lowerbound.hpp"
#include "gentlecert/superop.hpp"

using namespace gentlecert;

namespace {

ExplicitPovm projective_z(int d) { return ExplicitPovm::projective(CMatrix::Identity(d, d)); }

ExplicitPovm projective_x2() {
  CMatrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return ExplicitPovm::projective(h);
}

ExplicitPovm gentle_explicit(double alpha) {
  return ExplicitPovm(materialize_elements(GentlePovm(build_mub_design(2), alpha)));
}

// Brute-force per-copy collision sum S(nu1, nu2) = sum_y q1(y) q2(y) / p0(y)
// over the explicit outcome distributions; chi2 = E[prod_i S_i] - 1.
double chi2_bruteforce(const std::vector<ExplicitPovm>& povms, const AlternativeEnsemble& ens,
                       int n) {
  const int d = ens.dim;
  const int dprime = ens.count();
  const std::uint32_t total = 1u << dprime;
  const CMatrix rho0 = CMatrix::Identity(d, d) / static_cast<double>(d);
  double acc = 0.0;
  for (std::uint32_t i1 = 0; i1 < total; ++i1) {
    const CMatrix rho1 = rho0 + ens.delta(sign_vector_from_index(i1, dprime));
    for (std::uint32_t i2 = 0; i2 < total; ++i2) {
      const CMatrix rho2 = rho0 + ens.delta(sign_vector_from_index(i2, dprime));
      double prod = 1.0;
      for (int copy = 0; copy < n; ++copy) {
        const ExplicitPovm& povm = povms[povms.size() == 1 ? 0 : static_cast<std::size_t>(copy)];
        double s = 0.0;
        for (const auto& e : povm.elements())
          s += (rho1 * e).trace().real() * (rho2 * e).trace().real() / (rho0 * e).trace().real();
        prod *= s;
      }
      acc += prod;
    }
  }
  return acc / (static_cast<double>(total) * total) - 1.0;
}

}  // namespace

TEST_CASE("explicit POVM validation", "[lowerbound]") {
  REQUIRE_NOTHROW(projective_z(3));
  REQUIRE_NOTHROW(ExplicitPovm::from_design(build_mub_design(2)));
  std::vector<CMatrix> broken{CMatrix::Identity(2, 2) * 0.5};
  REQUIRE_THROWS_AS(ExplicitPovm(broken), std::invalid_argument);
  REQUIRE_NOTHROW(ExplicitPovm(broken, ExplicitPovm::Validate::None));
}

TEST_CASE("single-element channel projects onto the identity", "[lowerbound][superop]") {
  const HermitianBasis basis(2);
  const ExplicitPovm trivial(std::vector<CMatrix>{CMatrix::Identity(2, 2)});
  const SuperOpMatrix s = superop_from_povm(trivial, basis);
  for (int i = 0; i < 3; ++i) REQUIRE(std::abs(s.eigenvalues(i)) < 1e-12);
  REQUIRE(std::abs(s.eigenvalues(3) - 1.0) < 1e-12);
  REQUIRE(s.identity_eigen_index() == 3);
}

TEST_CASE("computational-basis channel spectrum at d=2", "[lowerbound][superop]") {
  const HermitianBasis basis(2);
  const SuperOpMatrix s = superop_from_povm(projective_z(2), basis);
  const double expected[4] = {0.0, 0.0, 1.0, 1.0};
  for (int i = 0; i < 4; ++i) REQUIRE(std::abs(s.eigenvalues(i) - expected[i]) < 1e-12);
}

TEST_CASE("averaged Z/X channel spectrum", "[lowerbound][superop]") {
  const HermitianBasis basis(2);
  const SuperOpMatrix avg = average_superop({projective_z(2), projective_x2()}, basis);
  const double expected[4] = {0.0, 0.5, 0.5, 1.0};
  for (int i = 0; i < 4; ++i) REQUIRE(std::abs(avg.eigenvalues(i) - expected[i]) < 1e-12);
  REQUIRE((avg.matrix - avg.matrix.transpose()).cwiseAbs().maxCoeff() == 0.0);
  // averaging identical copies is idempotent
  const SuperOpMatrix one = superop_from_povm(projective_z(2), basis);
  const SuperOpMatrix three = average_superop({projective_z(2), projective_z(2), projective_z(2)}, basis);
  REQUIRE((three.matrix - one.matrix).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("channel properties hold for gentle and projective POVMs", "[lowerbound][superop]") {
  const HermitianBasis basis(2);
  Rng rng(61, 0);
  for (const ExplicitPovm& povm :
       {gentle_explicit(0.1), projective_z(2), ExplicitPovm::from_design(build_mub_design(2))}) {
    const SuperOpMatrix s = superop_from_povm(povm, basis);
    const ChannelPropertyReport report = verify_channel_properties(s, povm, basis, 20, rng);
    REQUIRE(report.pass);
    REQUIRE(report.self_adjoint_residual <= 1e-10);
    REQUIRE(report.min_eigenvalue >= -1e-9);
    REQUIRE(report.trace_residual <= 1e-9);
    REQUIRE(report.unital_residual <= 1e-9);
    REQUIRE(report.rep_vs_direct_residual <= 1e-10);
    // spectrum lands in [0, 1] with the identity fixed point
    REQUIRE(s.eigenvalues(0) >= -1e-9);
    REQUIRE(s.eigenvalues(s.eigenvalues.size() - 1) <= 1.0 + 1e-9);
    REQUIRE(std::abs(s.eigenvalues(s.identity_eigen_index()) - 1.0) <= 1e-9);
    // non-identity eigenvectors are traceless
    for (int i = 0; i < s.eigenvalues.size(); ++i) {
      if (i == s.identity_eigen_index()) continue;
      const CMatrix v = basis.reconstruct(s.eigenvectors.col(i));
      REQUIRE(std::abs(v.trace()) <= tol::eig);
    }
  }
}

TEST_CASE("corrupted POVM fails trace preservation", "[lowerbound][superop]") {
  auto elems = projective_z(2).elements();
  elems[0] *= 1.01;
  const ExplicitPovm corrupted(elems, ExplicitPovm::Validate::None);
  const HermitianBasis basis(2);
  Rng rng(62, 0);
  const SuperOpMatrix s = superop_from_povm(corrupted, basis);
  const ChannelPropertyReport report = verify_channel_properties(s, corrupted, basis, 20, rng);
  REQUIRE_FALSE(report.pass);
  REQUIRE(report.trace_residual > 1e-9);
}

TEST_CASE("zero-trace element is rejected", "[lowerbound][superop]") {
  std::vector<CMatrix> elems{CMatrix::Zero(2, 2), CMatrix::Identity(2, 2)};
  const ExplicitPovm povm(elems, ExplicitPovm::Validate::None);
  REQUIRE_THROWS_AS(superop_from_povm(povm, HermitianBasis(2)), std::invalid_argument);
}

TEST_CASE("eigenvalue sum bound", "[lowerbound][superop]") {
  const HermitianBasis basis(2);
  SECTION("noiseless POVM carries nothing") {
    const SuperOpMatrix s = superop_from_povm(gentle_explicit(0.0), basis);
    const EigenvalueSumReport report = eigenvalue_sum_check(s, 0.0);
    REQUIRE(std::abs(report.traceless_sum) <= 1e-9);
    REQUIRE(report.bound == 0.0);
    REQUIRE(report.pass);
  }
  SECTION("bound arithmetic") {
    const SuperOpMatrix s = superop_from_povm(gentle_explicit(0.1), basis);
    const EigenvalueSumReport report = eigenvalue_sum_check(s, 0.1);
    REQUIRE(std::abs(report.bound - 0.16 / (0.96 * 0.96)) < 1e-12);
    REQUIRE(report.pass);
    const EigenvalueSumReport quarter = eigenvalue_sum_check(s, 0.25);
    REQUIRE(std::abs(quarter.bound - 16.0 * 0.0625 / (0.75 * 0.75)) < 1e-12);
  }
}

TEST_CASE("alternative ensembles", "[lowerbound][alternatives]") {
  const HermitianBasis basis(2);
  const SuperOpMatrix s = superop_from_povm(projective_z(2), basis);
  Rng rng(63, 0);
  SECTION("fixed mode picks the channel's blind directions") {
    const AlternativeEnsemble ens = build_alternatives(s, basis, 0.004, 2, AlternativeMode::Fixed, rng);
    REQUIRE(ens.count() == 2);
    for (const auto& v : ens.directions) {
      REQUIRE(std::abs(v.trace()) < 1e-12);
      // projective-Z kills the X/Y sector entirely
      REQUIRE(apply_superop(projective_z(2), v).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SECTION("delta invariants") {
    const AlternativeEnsemble ens =
        build_alternatives(s, basis, 0.004, 3, AlternativeMode::Randomized, rng);
    const SignVector nu{1, -1, 1};
    const CMatrix delta = ens.delta(nu);
    REQUIRE(std::abs(delta.trace()) < 1e-12);
    REQUIRE(std::abs(delta.norm() - ens.c * ens.epsilon / std::sqrt(2.0)) < 1e-10);
    SignVector neg{-1, 1, -1};
    REQUIRE((ens.delta(neg) + delta).cwiseAbs().maxCoeff() < 1e-15);
  }
  SECTION("domain validation") {
    REQUIRE_THROWS_AS(build_alternatives(s, basis, 0.004, 1, AlternativeMode::Fixed, rng),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(build_alternatives(s, basis, 0.004, 4, AlternativeMode::Fixed, rng),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(build_alternatives(s, basis, 0.01, 2, AlternativeMode::Fixed, rng),
                      std::invalid_argument);  // epsilon >= 1/c^2 = 0.005
  }
}

TEST_CASE("pairing identities between representation and direct application", "[lowerbound]") {
  const HermitianBasis basis(2);
  const ExplicitPovm povm = gentle_explicit(0.1);
  const SuperOpMatrix s = superop_from_povm(povm, basis);
  Rng rng(64, 0);
  const AlternativeEnsemble ens = build_alternatives(s, basis, 0.004, 2, AlternativeMode::Fixed, rng);
  const std::uint32_t total = 4;
  for (std::uint32_t i1 = 0; i1 < total; ++i1) {
    for (std::uint32_t i2 = 0; i2 < total; ++i2) {
      const CMatrix d1 = ens.delta(sign_vector_from_index(i1, 2));
      const CMatrix d2 = ens.delta(sign_vector_from_index(i2, 2));
      const double direct = (d1.adjoint() * apply_superop(povm, d2)).trace().real();
      const RVector c1 = basis.coefficients(d1);
      const RVector c2 = basis.coefficients(d2);
      const double rep = c1.dot(s.matrix * c2);
      REQUIRE(std::abs(direct - rep) < 1e-10);
      // eigen-pairing diagonalization over the fixed eigen directions
      const int idx = s.identity_eigen_index();
      double diag = 0.0;
      const SignVector n1 = sign_vector_from_index(i1, 2);
      const SignVector n2 = sign_vector_from_index(i2, 2);
      // fixed mode picked the two smallest traceless eigenvalues
      std::vector<double> mus;
      for (int i = 0; i < 4; ++i)
        if (i != idx) mus.push_back(s.eigenvalues(i));
      for (int i = 0; i < 2; ++i)
        diag += mus[static_cast<std::size_t>(i)] * n1[static_cast<std::size_t>(i)] *
                n2[static_cast<std::size_t>(i)];
      diag *= ens.c * ens.c * ens.epsilon * ens.epsilon / (2.0 * 2.0);
      REQUIRE(std::abs(direct - diag) < 1e-10);
    }
  }
}

TEST_CASE("admissibility statistics", "[lowerbound][alternatives]") {
  Rng rng(65, 0);
  SECTION("tiny epsilon at d=3 is almost surely admissible") {
    const HermitianBasis basis(3);
    const SuperOpMatrix s = superop_from_povm(projective_z(3), basis);
    const AlternativeEnsemble ens =
        build_alternatives(s, basis, 1e-6, 5, AlternativeMode::Fixed, rng);
    const AdmissibilityReport report = admissibility_stats(ens, 10000, rng);
    const double target = 1.0 - 2.0 * std::exp(-3.0);
    const double sigma = std::sqrt(target * (1.0 - target) / 10000.0);
    REQUIRE(report.fraction >= target - 3.0 * sigma);
  }
  SECTION("all-ones sign vector is admissible at full direction count") {
    const HermitianBasis basis(3);
    const SuperOpMatrix s = superop_from_povm(projective_z(3), basis);
    const AlternativeEnsemble ens =
        build_alternatives(s, basis, 1e-6, 8, AlternativeMode::Randomized, rng);
    const SignVector ones(8, 1);
    const RVector mu = hermitian_eigenvalues(ens.delta(ones));
    REQUIRE(1.0 / 3.0 + mu(0) >= 0.0);
    REQUIRE(0.5 * mu.cwiseAbs().sum() > ens.epsilon);
  }
  SECTION("epsilon at the metric ceiling admits nothing") {
    AlternativeEnsemble ens;
    ens.dim = 2;
    ens.epsilon = 1.2;
    ens.c = kEnsembleConstant;
    ens.amplitude = 0.05;
    const HermitianBasis basis(2);
    ens.directions = {basis.element(0), basis.element(2)};
    const AdmissibilityReport report = admissibility_stats(ens, 500, rng);
    REQUIRE(report.fraction == 0.0);
  }
}

TEST_CASE("chi-squared decoupling", "[lowerbound][chi2]") {
  const HermitianBasis basis(2);
  Rng rng(66, 0);
  SECTION("zero perturbation gives zero distance") {
    const SuperOpMatrix s = superop_from_povm(gentle_explicit(0.1), basis);
    AlternativeEnsemble ens = build_alternatives(s, basis, 0.004, 2, AlternativeMode::Fixed, rng);
    ens.amplitude = 0.0;
    const Chi2Result result = chi2_decoupled({s}, basis, ens, 3, Chi2Mode::Exact, rng);
    REQUIRE(std::abs(result.chi2) < 1e-14);
    REQUIRE(result.conditioning_factor ==
            (std::exp(2.0) / (std::exp(2.0) - 2.0)) * (std::exp(2.0) / (std::exp(2.0) - 2.0)));
  }
  SECTION("blind directions of the projective channel decouple completely") {
    const SuperOpMatrix s = superop_from_povm(projective_z(2), basis);
    const AlternativeEnsemble ens = build_alternatives(s, basis, 0.004, 2, AlternativeMode::Fixed, rng);
    const Chi2Result result = chi2_decoupled({s}, basis, ens, 1, Chi2Mode::Exact, rng);
    REQUIRE(std::abs(result.chi2) < 1e-14);
  }
  SECTION("exact mode matches the brute-force product oracle") {
    const ExplicitPovm povm = gentle_explicit(0.1);
    const SuperOpMatrix s = superop_from_povm(povm, basis);
    const AlternativeEnsemble ens = build_alternatives(s, basis, 0.004, 2, AlternativeMode::Fixed, rng);
    for (int n : {1, 3, 5}) {
      const Chi2Result fast = chi2_decoupled({s}, basis, ens, n, Chi2Mode::Exact, rng);
      const double brute = chi2_bruteforce({povm}, ens, n);
      REQUIRE(std::abs(fast.chi2 - brute) <= 1e-8);
    }
  }
  SECTION("per-copy channel lists work") {
    const ExplicitPovm z = projective_z(2);
    const ExplicitPovm x = projective_x2();
    const SuperOpMatrix sz = superop_from_povm(z, basis);
    const SuperOpMatrix sx = superop_from_povm(x, basis);
    const SuperOpMatrix avg = average_superop({z, x}, basis);
    const AlternativeEnsemble ens =
        build_alternatives(avg, basis, 0.004, 2, AlternativeMode::Fixed, rng);
    const Chi2Result fast = chi2_decoupled({sz, sx}, basis, ens, 2, Chi2Mode::Exact, rng);
    const double brute = chi2_bruteforce({z, x}, ens, 2);
    REQUIRE(std::abs(fast.chi2 - brute) <= 1e-10);
  }
  SECTION("monte carlo mode approximates exact") {
    const SuperOpMatrix s = superop_from_povm(gentle_explicit(0.2), basis);
    const AlternativeEnsemble ens = build_alternatives(s, basis, 0.004, 3, AlternativeMode::Fixed, rng);
    const Chi2Result exact = chi2_decoupled({s}, basis, ens, 4, Chi2Mode::Exact, rng);
    const Chi2Result mc = chi2_decoupled({s}, basis, ens, 4, Chi2Mode::MonteCarlo, rng, 40000);
    REQUIRE(std::abs(exact.chi2 - mc.chi2) < 1e-6);
  }
  SECTION("invalid regime is reported") {
    const SuperOpMatrix s = superop_from_povm(projective_z(2), basis);
    AlternativeEnsemble ens;
    ens.dim = 2;
    ens.epsilon = 0.004;
    ens.amplitude = 2.0;  // far outside the perturbative regime
    ens.directions = {HermitianBasis(2).element(2), HermitianBasis(2).element(0)};
    REQUIRE_THROWS_AS(chi2_decoupled({s}, basis, ens, 2, Chi2Mode::Exact, rng), std::domain_error);
  }
  SECTION("exact mode caps the direction count") {
    const HermitianBasis basis4(4);
    const SuperOpMatrix s = superop_from_povm(projective_z(4), basis4);
    const AlternativeEnsemble ens =
        build_alternatives(s, basis4, 0.004, 14, AlternativeMode::Randomized, rng);
    REQUIRE_THROWS_AS(chi2_decoupled({s}, basis4, ens, 2, Chi2Mode::Exact, rng),
                      std::invalid_argument);
  }
}

TEST_CASE("closed-form sample-size scaling", "[lowerbound][rates]") {
  const double n2 = lower_bound_sample_size(2, 0.3, 0.1, LowerBoundMode::Fixed);
  const double n4 = lower_bound_sample_size(4, 0.3, 0.1, LowerBoundMode::Fixed);
  REQUIRE(std::abs(n4 / n2 - 8.0) < 0.01 * 8.0);
  const double half_alpha = lower_bound_sample_size(2, 0.3, 0.05, LowerBoundMode::Fixed);
  REQUIRE(std::abs(half_alpha / n2 - 4.0) < 0.01 * 4.0);
  // fixed/randomized ratio grows linearly with d
  auto ratio = [](int d) {
    return lower_bound_sample_size(d, 0.3, 0.1, LowerBoundMode::Fixed) /
           lower_bound_sample_size(d, 0.3, 0.1, LowerBoundMode::Randomized);
  };
  REQUIRE(std::abs(ratio(32) / ratio(16) - 2.0) < 0.02);
  REQUIRE_THROWS_AS(lower_bound_sample_size(2, 1.5, 0.1, LowerBoundMode::Fixed),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lower_bound_sample_size(2, 0.3, 0.6, LowerBoundMode::Fixed),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lower_bound_sample_size(2, 0.3, 0.25, LowerBoundMode::Randomized),
                    std::domain_error);
}

TEST_CASE("inflated channel for a non-uniform full-rank null stays self-adjoint",
          "[lowerbound][superop]") {
  // smoke test for the general rho0 extension: weights 1/(d Tr[rho0 E_y])
  const ExplicitPovm povm = gentle_explicit(0.2);
  CMatrix rho0(2, 2);
  rho0 << 0.7, 0.1, 0.1, 0.3;
  const HermitianBasis basis(2);
  RMatrix h = RMatrix::Zero(4, 4);
  for (const auto& e : povm.elements()) {
    const double w = 2.0 * (rho0 * e).trace().real();
    const RVector c = basis.coefficients(e);
    h.noalias() += (c * c.transpose()) / w;
  }
  REQUIRE((h - h.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(h, Eigen::EigenvaluesOnly);
  REQUIRE(solver.eigenvalues()(0) >= -1e-12);
}
