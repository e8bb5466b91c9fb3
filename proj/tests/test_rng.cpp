// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "gentlecert/rng.hpp"

using gentlecert::Rng;

TEST_CASE("identical seed and stream reproduce the sequence", "[rng]") {
  Rng a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams decorrelate", "[rng]") {
  Rng a(42, 0), b(42, 1);
  int equal = 0;
  for (int i = 0; i < 1000; ++i) equal += a.next_u64() == b.next_u64();
  REQUIRE(equal == 0);
}

TEST_CASE("uniform stays in [0,1) with the right mean", "[rng]") {
  Rng rng(1, 0);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  // se of the mean is 1/sqrt(12 n) ~ 6.5e-4
  REQUIRE(std::abs(sum / n - 0.5) < 4.0 * 6.5e-4);
}

TEST_CASE("normal moments", "[rng]") {
  Rng rng(2, 0);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  REQUIRE(std::abs(sum / n) < 4.0 / std::sqrt(static_cast<double>(n)));
  REQUIRE(std::abs(sq / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("dirichlet weights normalize", "[rng]") {
  Rng rng(3, 0);
  const auto w = rng.dirichlet_uniform(5);
  double sum = 0.0;
  for (double wi : w) {
    REQUIRE(wi >= 0.0);
    sum += wi;
  }
  REQUIRE(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("cdf sampling matches the weights", "[rng]") {
  Rng rng(4, 0);
  const std::vector<double> cdf{1.0, 3.0, 6.0};  // weights 1, 2, 3
  std::vector<int> hits(3, 0);
  const int n = 60000;
  for (int i = 0; i < n; ++i) ++hits[static_cast<std::size_t>(rng.sample_cdf(cdf))];
  const double expected[3] = {1.0 / 6, 2.0 / 6, 3.0 / 6};
  for (int k = 0; k < 3; ++k) {
    const double p = expected[k];
    const double se = std::sqrt(p * (1 - p) / n);
    REQUIRE(std::abs(hits[static_cast<std::size_t>(k)] / static_cast<double>(n) - p) < 4 * se);
  }
}
