// Copyright 2026 The noma-swipt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "noma/power_allocation.hpp"
#include "support/oracles.hpp"

using noma::DpsStatus;
using noma::RateTarget;

namespace {

// Far-user rate with the near layer as noise, written out independently.
double far_rate(double g, double p, double noise, double alpha_near, double alpha_far) {
  return std::log2(1.0 + g * p * alpha_far / (g * p * alpha_near + noise));
}

}  // namespace

TEST_CASE("target_sinr") {
  CHECK(noma::target_sinr(1.0) == 1.0);
  CHECK(noma::target_sinr(2.0) == 3.0);
  CHECK(noma::target_sinr(0.5) == doctest::Approx(0.414213562373095).epsilon(1e-14));
  CHECK_THROWS_AS(noma::target_sinr(0.0), std::invalid_argument);
  CHECK_THROWS_AS(noma::target_sinr(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(noma::target_sinr(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(noma::target_sinr(std::nan("")), std::invalid_argument);

  const RateTarget t = RateTarget::from_rate(3.0);
  CHECK(t.target_rate == 3.0);
  CHECK(t.target_sinr == 7.0);
}

TEST_CASE("fps_split") {
  const auto s = noma::fps_split(0.8);
  CHECK(s.alpha_far == 0.8);
  CHECK(s.alpha_near == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(s.alpha_near + s.alpha_far == 1.0);

  const auto all_far = noma::fps_split(1.0);
  CHECK(all_far.alpha_near == 0.0);
  CHECK(all_far.alpha_far == 1.0);

  CHECK_THROWS_AS(noma::fps_split(0.5), std::invalid_argument);
  CHECK_THROWS_AS(noma::fps_split(0.4), std::invalid_argument);
  CHECK_THROWS_AS(noma::fps_split(1.0000001), std::invalid_argument);
  CHECK_THROWS_AS(noma::fps_split(std::nan("")), std::invalid_argument);
}

TEST_CASE("dps_split worked examples at S = 1") {
  const RateTarget target = RateTarget::from_rate(1.0);
  const double noise = 1e-9;
  const double power = 1.0;

  SUBCASE("gP = 9 N lands on 5/9") {
    const auto a = noma::dps_split(9.0 * noise, power, noise, target);
    CHECK(a.status == DpsStatus::exact);
    CHECK(a.split.alpha_far == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
    CHECK(a.split.alpha_near == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
    const double sinr = 9.0 * a.split.alpha_far / (9.0 * a.split.alpha_near + 1.0);
    CHECK(sinr == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("gP = N is the feasibility boundary") {
    const auto a = noma::dps_split(noise, power, noise, target);
    CHECK(a.feasible());
    CHECK(a.split.alpha_far == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a.split.alpha_near == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("gP = N / 2 is clamped and flagged") {
    CHECK(noma::dps_raw_alpha_far(0.5 * noise, power, noise, target) ==
          doctest::Approx(1.5).epsilon(1e-14));
    const auto a = noma::dps_split(0.5 * noise, power, noise, target);
    CHECK(a.status == DpsStatus::infeasible);
    CHECK_FALSE(a.feasible());
    CHECK(a.split.alpha_near == 0.0);
    CHECK(a.split.alpha_far == 1.0);
  }
  SUBCASE("zero channel is infeasible, not an error") {
    const auto a = noma::dps_split(0.0, power, noise, target);
    CHECK(a.status == DpsStatus::infeasible);
    CHECK(a.split.alpha_far == 1.0);
  }
}

TEST_CASE("dps_split floors at the equal split for sub-unit target SINR") {
  // S = sqrt(2) - 1 < 1: a strong channel would push alpha_far below 1/2.
  const RateTarget target = RateTarget::from_rate(0.5);
  const auto a = noma::dps_split(1.0, 1.0, 1e-9, target);
  CHECK(a.status == DpsStatus::floored);
  CHECK(a.feasible());
  CHECK(a.split.alpha_far == 0.5);
  CHECK(a.split.alpha_near == 0.5);
  CHECK(far_rate(1.0, 1.0, 1e-9, 0.5, 0.5) >= target.target_rate);
}

TEST_CASE("dps_split properties over random inputs") {
  std::mt19937_64 rng(0xD95);
  std::uniform_real_distribution<double> rate_dist(0.1, 4.0);
  int exact_checked = 0;
  for (int i = 0; i < 50'000; ++i) {
    const double g = noma::test::log_uniform(rng, 1e-9, 1e-2);
    const double p = noma::test::log_uniform(rng, 1e-4, 10.0);
    const double noise = noma::test::log_uniform(rng, 1e-13, 1e-7);
    const RateTarget target = RateTarget::from_rate(rate_dist(rng));

    const double raw = noma::dps_raw_alpha_far(g, p, noise, target);
    CHECK(raw >= target.target_sinr / (1.0 + target.target_sinr));

    const auto a = noma::dps_split(g, p, noise, target);
    REQUIRE(a.split.alpha_near + a.split.alpha_far == 1.0);
    REQUIRE(a.split.alpha_near >= 0.0);
    REQUIRE(a.split.alpha_near <= a.split.alpha_far);
    REQUIRE(a.split.alpha_far <= 1.0);

    if (a.status == DpsStatus::exact && a.split.alpha_far < 1.0) {
      const double r = far_rate(g, p, noise, a.split.alpha_near, a.split.alpha_far);
      REQUIRE(std::abs(r - target.target_rate) <= 1e-9 * target.target_rate);
      ++exact_checked;
    }

    // Non-increasing in channel quality.
    const double better = noma::dps_split(2.0 * g, p, noise, target).split.alpha_far;
    REQUIRE(better <= a.split.alpha_far);
  }
  CHECK(exact_checked > 10'000);
}
