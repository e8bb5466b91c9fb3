// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "gentlecert/serialize.hpp"
#include "gentlecert/two_design.hpp"

using namespace gentlecert;

TEST_CASE("qubit MUB design is computational, Hadamard, circular", "[designs]") {
  const TwoDesign design = build_mub_design(2);
  REQUIRE(design.count() == 6);
  const double s = 1.0 / std::sqrt(2.0);
  REQUIRE(std::abs(design.vector(0)(0) - 1.0) < 1e-14);
  REQUIRE(std::abs(design.vector(1)(1) - 1.0) < 1e-14);
  REQUIRE(std::abs(design.vector(2)(0) - s) < 1e-14);
  REQUIRE(std::abs(design.vector(2)(1) - s) < 1e-14);
  REQUIRE(std::abs(design.vector(3)(1) + s) < 1e-14);
  REQUIRE(std::abs(design.vector(4)(1) - Complex(0, s)) < 1e-14);
  REQUIRE(std::abs(design.vector(5)(1) - Complex(0, -s)) < 1e-14);
}

TEST_CASE("MUB overlap structure for every supported dimension", "[designs]") {
  for (int d : {2, 3, 4, 5, 7, 8}) {
    const TwoDesign design = build_mub_design(d);
    REQUIRE(design.count() == d * (d + 1));
    for (int a = 0; a < design.count(); ++a) {
      for (int b = a; b < design.count(); ++b) {
        const double overlap = std::norm(design.vector(a).dot(design.vector(b)));
        if (a / d == b / d) {
          // within one basis: orthonormal columns
          REQUIRE(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-10);
        } else {
          REQUIRE(std::abs(overlap - 1.0 / d) < tol::design);
        }
      }
    }
  }
}

TEST_CASE("unsupported dimensions are rejected with guidance", "[designs]") {
  for (int d : {1, 6, 9, 10, 12}) {
    REQUIRE_THROWS_MATCHES(build_mub_design(d), std::invalid_argument,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("supported dimensions")));
  }
}

TEST_CASE("second-moment identity evaluated on Pauli Z", "[designs]") {
  const TwoDesign design = build_mub_design(2);
  CMatrix pauli_z(2, 2);
  pauli_z << 1, 0, 0, -1;
  double lhs = 0.0;
  for (const auto& v : design.vectors()) {
    const double q = (v.adjoint() * pauli_z * v)(0).real();
    lhs += q * q;
  }
  lhs /= design.count();
  const double rhs = ((pauli_z * pauli_z).trace().real() + 0.0) / (2.0 * 3.0);
  REQUIRE(std::abs(lhs - 1.0 / 3.0) < 1e-12);
  REQUIRE(std::abs(rhs - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("moment identity with the identity matrix is exact", "[designs]") {
  for (int d : {2, 3}) {
    const TwoDesign design = build_mub_design(d);
    double lhs = 0.0;
    for (const auto& v : design.vectors()) {
      const double q = (v.adjoint() * v)(0).real();
      lhs += q * q;
    }
    lhs /= design.count();
    const double rhs = (d + static_cast<double>(d) * d) / (static_cast<double>(d) * (d + 1));
    REQUIRE(std::abs(lhs - 1.0) < 1e-12);
    REQUIRE(rhs == 1.0);
  }
}

TEST_CASE("verify_two_design passes on shipped designs", "[designs]") {
  Rng rng(21, 0);
  for (int d : {2, 3, 5, 7}) {
    const TwoDesign design = build_mub_design(d);
    const DesignVerification report = verify_two_design(design, 100, rng);
    REQUIRE(report.pass);
    REQUIRE(report.max_moment_residual <= 1e-10);
    REQUIRE(report.max_frame_residual <= 1e-10);
  }
}

TEST_CASE("verify_two_design flags single-vector corruption", "[designs]") {
  Rng rng(22, 0);
  for (int d : {2, 3, 4, 5, 7, 8}) {
    auto vecs = build_mub_design(d).vectors();
    // orthogonal displacement: vector 0 is e_0, so bump a different component
    CVector bump = CVector::Zero(d);
    bump(d - 1) = 1e-3;
    vecs[0] = (vecs[0] + bump).normalized();
    const TwoDesign corrupted(d, vecs, TwoDesign::Validate::None);
    const DesignVerification report = verify_two_design(corrupted, 50, rng);
    REQUIRE_FALSE(report.pass);
    REQUIRE(std::max(report.max_moment_residual, report.max_frame_residual) > tol::design);
  }
}

TEST_CASE("design probabilities", "[designs]") {
  const TwoDesign design = build_mub_design(2);
  SECTION("maximally mixed state gives the uniform vector") {
    const auto p = design_probabilities(design, maximally_mixed(2));
    for (double pm : p) REQUIRE(std::abs(pm - 1.0 / 6.0) < 1e-12);
  }
  SECTION("pure |0> state") {
    CVector e0(2);
    e0 << 1, 0;
    const auto p = design_probabilities(design, DensityMatrix(PureState(e0)));
    const double expected[6] = {1.0 / 3, 0.0, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6};
    for (int m = 0; m < 6; ++m) REQUIRE(std::abs(p[static_cast<std::size_t>(m)] - expected[m]) < 1e-12);
  }
  SECTION("normalization for random states") {
    Rng rng(23, 0);
    for (int i = 0; i < 10; ++i) {
      const auto p = design_probabilities(design, random_density(2, rng));
      double sum = 0.0;
      for (double pm : p) {
        REQUIRE(pm >= 0.0);
        sum += pm;
      }
      REQUIRE(std::abs(sum - 1.0) < 1e-10);
    }
  }
  SECTION("dimension mismatch") {
    REQUIRE_THROWS_AS(design_probabilities(design, maximally_mixed(3)), std::invalid_argument);
  }
}

TEST_CASE("probability displacement equals the Frobenius norm link", "[designs]") {
  Rng rng(24, 0);
  for (int d : {2, 3}) {
    const TwoDesign design = build_mub_design(d);
    const double count = design.count();
    for (int i = 0; i < 10; ++i) {
      CMatrix delta = random_hermitian_unit(d, rng);
      delta -= (delta.trace() / static_cast<double>(d)) * CMatrix::Identity(d, d);
      delta *= 0.05 / d;  // small enough to keep rho0 + delta PSD
      const DensityMatrix rho0 = maximally_mixed(d);
      const DensityMatrix rho(rho0.matrix() + delta);
      const auto p = design_probabilities(design, rho);
      const auto p0 = design_probabilities(design, rho0);
      double l2sq = 0.0;
      for (std::size_t m = 0; m < p.size(); ++m) l2sq += (p[m] - p0[m]) * (p[m] - p0[m]);
      const double link = (static_cast<double>(d) * d / (count * count)) * delta.squaredNorm();
      REQUIRE(std::abs(l2sq - link) < 1e-10);
    }
  }
}

TEST_CASE("design JSON round trip", "[designs][serialize]") {
  const TwoDesign design = build_mub_design(3);
  const json j = design_to_json(design);
  const TwoDesign back = design_from_json(j);
  REQUIRE(back.dim() == design.dim());
  REQUIRE(back.count() == design.count());
  for (int m = 0; m < design.count(); ++m)
    REQUIRE((back.vector(m) - design.vector(m)).norm() == 0.0);
}

TEST_CASE("design construction validates the moment identities", "[designs]") {
  auto vecs = build_mub_design(2).vectors();
  vecs.pop_back();  // breaks the frame identity
  REQUIRE_THROWS_AS(TwoDesign(2, vecs), std::invalid_argument);
}
