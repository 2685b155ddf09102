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

#include <set>

#include "bosim/errors.hpp"
#include "bosim/fock.hpp"
#include "support/oracles.hpp"

using namespace bosim;

namespace {
std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}
}  // namespace

TEST_CASE("enumerate_configurations lists weak compositions in descending order", "[fock]") {
  auto two = enumerate_configurations(2, 2);
  REQUIRE(two == std::vector<ModeOccupation>{{2, 0}, {1, 1}, {0, 2}});

  CHECK(enumerate_configurations(3, 3).size() == 10);
  CHECK(enumerate_configurations(0, 4) == std::vector<ModeOccupation>{{0, 0, 0, 0}});
  CHECK(enumerate_configurations(3, 1) == std::vector<ModeOccupation>{{3}});

  auto three = enumerate_configurations(3, 3);
  CHECK(std::is_sorted(three.begin(), three.end(), std::greater<>()));
}

TEST_CASE("enumeration sizes and sums match the binomial count", "[fock]") {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 1; m <= 10; ++m) {
      auto configs = enumerate_configurations(n, m);
      REQUIRE(configs.size() == binomial(n + m - 1, m - 1));
      REQUIRE(configuration_count(n, m) == configs.size());
      std::set<ModeOccupation> unique(configs.begin(), configs.end());
      REQUIRE(unique.size() == configs.size());
      for (const auto& c : configs) REQUIRE(c.total() == n);
      // Same set as an independent recursive enumeration.
      std::set<ModeOccupation> oracle;
      for (auto& v : testing::all_configurations(n, m)) oracle.emplace(std::move(v));
      REQUIRE(oracle == unique);
    }
  }
}

TEST_CASE("enumeration guard reports the would-be count", "[fock]") {
  try {
    enumerate_configurations(6, 10, 100);
    FAIL("expected GuardError");
  } catch (const GuardError& e) {
    CHECK(e.requested() == 5005);
    CHECK(e.limit() == 100);
  }
  CHECK_THROWS_AS(enumerate_configurations(30, 40), GuardError);
}

TEST_CASE("configuration_rank is the enumeration index", "[fock]") {
  CHECK(configuration_rank(ModeOccupation{2, 0}) == 0);
  CHECK(configuration_rank(ModeOccupation{0, 2}) == 2);

  for (auto [n, m] : {std::pair{3, 4}, std::pair{5, 3}, std::pair{4, 7}, std::pair{0, 3}}) {
    auto configs = enumerate_configurations(n, m);
    for (std::size_t k = 0; k < configs.size(); ++k) {
      REQUIRE(configuration_rank(configs[k]) == k);
      REQUIRE(configuration_unrank(n, m, k) == configs[k]);
    }
  }
  CHECK_THROWS_AS(configuration_unrank(2, 2, 3), InvalidArgument);
}

TEST_CASE("occupancy_factorial_product", "[fock]") {
  CHECK(occupancy_factorial_product(ModeOccupation{1, 1, 1}) == 1);
  CHECK(occupancy_factorial_product(ModeOccupation{2, 0, 2}) == 4);
  CHECK(occupancy_factorial_product(ModeOccupation{3, 1}) == 6);
  CHECK(occupancy_factorial_product(ModeOccupation{20}) == 2432902008176640000ULL);
  CHECK_THROWS_AS(occupancy_factorial_product(ModeOccupation{21}), InvalidArgument);
  CHECK_THROWS_AS(occupancy_factorial_product(ModeOccupation{20, 20}), InvalidArgument);
}

TEST_CASE("ModeOccupation validation and text form", "[fock]") {
  CHECK_THROWS_AS(ModeOccupation({1, -1}), InvalidArgument);
  ModeOccupation occ{1, 0, 2, 1};
  CHECK(occ.total() == 4);
  CHECK_FALSE(occ.collision_free());
  CHECK(occ.to_string() == "1,0,2,1");
  CHECK(ModeOccupation::parse("1,0,2,1") == occ);
  CHECK_THROWS_AS(ModeOccupation::parse("1,,2"), ParseError);
  CHECK(ModeOccupation::single_photons(2, 4) == ModeOccupation{1, 1, 0, 0});
}

TEST_CASE("ExperimentShape validation", "[fock]") {
  CHECK_NOTHROW(ExperimentShape{3, 5}.validate());
  CHECK_THROWS_AS((ExperimentShape{0, 5}.validate()), InvalidArgument);
  CHECK_THROWS_AS((ExperimentShape{6, 5}.validate()), InvalidArgument);
  CHECK_THROWS_AS((ExperimentShape{10, 40}.validate()), GuardError);
}
