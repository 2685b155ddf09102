// Copyright 2026 The bosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bosim/errors.hpp"
#include "bosim/experiments.hpp"
#include "bosim/io.hpp"
#include "support/oracles.hpp"

using namespace bosim;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("ModeCountRule parsing", "[experiments]") {
  CHECK(ModeCountRule::parse("n^2").modes(4) == 16);
  CHECK(ModeCountRule::parse("2n").modes(4) == 8);
  CHECK(ModeCountRule::parse("n").modes(4) == 4);
  CHECK(ModeCountRule::parse("3n").to_string() == "3n");
  CHECK(ModeCountRule::square().to_string() == "n^2");
  CHECK_THROWS_AS(ModeCountRule::parse("n^3"), ParseError);
  CHECK_THROWS_AS(ModeCountRule::parse("0n"), ParseError);
}

TEST_CASE("scaling experiment with a perfect source", "[experiments]") {
  ScalingConfig config;
  config.noise.p = 1.0;
  config.noise.p0 = 0.5;
  config.noise.p2 = 0.5;
  config.trials = 2000;
  for (const auto& row : run_scaling_experiment(config)) {
    CHECK(row.feasible);
    CHECK(row.analytic_ideal_probability == 1.0);
    CHECK(row.empirical_ideal_fraction == 1.0);
    CHECK(row.tvd_ideal_noisy == 0.0);
    CHECK(row.tvd_ideal_postselected <= 1e-15);
    CHECK_THAT(row.postselection_success, WithinAbs(1.0, 1e-12));
    CHECK(row.postselection_success <= 1.0);
  }
}

TEST_CASE("scaling experiment regression table", "[experiments]") {
  ScalingConfig config;
  config.noise.p = 0.9;
  config.noise.p0 = 0.5;
  config.noise.p2 = 0.5;
  const auto rows = run_scaling_experiment(config);
  REQUIRE(rows.size() == 4);

  const double analytic[] = {0.9, 0.81, 0.729, 0.6561};
  // Frozen from the exact mixture for seed 1, m = n^2.
  const double tvd_noisy[] = {0.099999999999999978, 0.18500000000000005, 0.25773386341292404,
                              0.32022045164119262};
  const double success[] = {0.9, 0.815, 0.7425, 0.6804375};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const int n = static_cast<int>(i) + 1;
    CHECK(row.photons == n);
    CHECK(row.modes == n * n);
    CHECK_THAT(row.analytic_ideal_probability, WithinRel(analytic[i], 1e-15));
    CHECK(std::abs(row.empirical_ideal_fraction - analytic[i]) <=
          testing::three_sigma(analytic[i], config.trials));
    CHECK_THAT(row.tvd_ideal_noisy, WithinAbs(tvd_noisy[i], 1e-12));
    CHECK_THAT(row.postselection_success, WithinAbs(success[i], 1e-12));
    if (i > 0) CHECK(row.tvd_ideal_noisy > rows[i - 1].tvd_ideal_noisy);
  }
}

TEST_CASE("scaling experiment marks rows beyond the guards", "[experiments]") {
  ScalingConfig config;
  config.photon_counts = {2, 5};
  config.noise.p = 0.9;
  config.noise.p2 = 0.5;
  config.noise.p0 = 0.5;
  config.trials = 100;
  config.options.max_configurations = 10'000;
  const auto rows = run_scaling_experiment(config);
  CHECK(rows[0].feasible);
  CHECK_FALSE(rows[1].feasible);
  CHECK_THAT(rows[1].analytic_ideal_probability, WithinRel(std::pow(0.9, 5), 1e-14));
  CHECK(std::isnan(rows[1].tvd_ideal_noisy));
  CHECK(io::scaling_csv(rows).find("5,25,0.9,") != std::string::npos);
}

TEST_CASE("filter experiment", "[experiments]") {
  FilterConfig perfect;
  perfect.eta = 1.0;
  perfect.trials = 1000;
  for (const auto& row : run_filter_experiment(perfect)) CHECK(row.empirical_success == 1.0);

  FilterConfig half;
  half.eta = 0.5;
  half.trials = 1000;
  auto rows = run_filter_experiment(half);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].analytic_success == rows[i - 1].analytic_success / 2);
  }

  FilterConfig lossy;
  lossy.eta = 0.9;
  lossy.photon_counts = {3};
  auto three = run_filter_experiment(lossy);
  CHECK(std::abs(three[0].empirical_success - 0.729) <= 0.005);
}
