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

#include <filesystem>

#include "bosim/errors.hpp"
#include "bosim/io.hpp"

using namespace bosim;
using nlohmann::json;

TEST_CASE("matrix JSON uses [re, im] pairs", "[io]") {
  auto m = io::matrix_from_json(json::parse(R"([[[1,0],[2,0.5]],[[3,-1],[4,0]]])"));
  REQUIRE(m.rows() == 2);
  CHECK(m(0, 1) == Complex(2.0, 0.5));
  CHECK(m(1, 0) == Complex(3.0, -1.0));
  CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);

  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"([[[1,0],[2,0]],[[3,0]]])")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"([[[1]]])")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"([[["a",0]]])")), ParseError);
  try {
    io::matrix_from_json(json::parse(R"([[[1,0],[2,0]],[[3,0],[4]]])"));
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("matrix[1][1]") != std::string::npos);
  }
}

TEST_CASE("parse errors name the line", "[io]") {
  try {
    io::parse_json("{\n  \"n\": 2,\n  oops\n}", "config.json");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("config.json") != std::string::npos);
    CHECK(what.find("line 3") != std::string::npos);
  }
}

TEST_CASE("circuit JSON", "[io]") {
  auto circuit = io::circuit_from_json(json::parse(
      R"([{"kind":"bs","i":0,"j":1,"theta":0.7854,"phi":0.0},{"kind":"ps","i":2,"phi":1.571}])"));
  REQUIRE(circuit.size() == 2);
  const auto& bs = std::get<Beamsplitter>(circuit[0]);
  CHECK(bs.j == 1);
  CHECK(bs.theta == 0.7854);
  CHECK(std::get<PhaseShifter>(circuit[1]).phi == 1.571);
  CHECK(io::circuit_to_json(circuit) == io::circuit_to_json(io::circuit_from_json(io::circuit_to_json(circuit))));

  CHECK_THROWS_AS(io::circuit_from_json(json::parse(R"([{"kind":"mirror","i":0}])")), ParseError);
  CHECK_THROWS_AS(io::circuit_from_json(json::parse(R"([{"kind":"bs","i":0,"theta":1}])")), ParseError);
  CHECK_THROWS_AS(io::circuit_from_json(json::parse(R"([{"kind":"ps","i":0.5,"phi":1}])")), ParseError);
}

TEST_CASE("noise model JSON", "[io]") {
  auto noise = io::noise_from_json(json::parse(
      R"({"p":0.9,"p0":0.5,"p2":0.5,"mode":"distinguishability","eta":0.95})"));
  CHECK(noise.p == 0.9);
  CHECK(noise.p2 == 0.5);
  CHECK(noise.channel == ErrorChannel::kDistinguishability);
  CHECK(noise.eta == 0.95);
  CHECK(io::noise_to_json(io::noise_from_json(io::noise_to_json(noise))) == io::noise_to_json(noise));

  auto defaults = io::noise_from_json(json::parse(R"({"p":0.8})"));
  CHECK(defaults.p0 == 1.0);
  CHECK(defaults.p2 == 0.0);
  CHECK(defaults.channel == ErrorChannel::kNumber);

  CHECK(io::noise_from_json(json::parse(R"({"p2":0.25})")).p0 == 0.75);
  CHECK_THROWS_AS(io::noise_from_json(json::parse(R"({"p":0.9,"q":1})")), ParseError);
  CHECK_THROWS_AS(io::noise_from_json(json::parse(R"({"mode":"other"})")), ParseError);
}

TEST_CASE("distribution CSV layout", "[io]") {
  auto dist = output_distribution(UnitaryMatrix::identity(2), {1, 1});
  const std::string csv = io::distribution_csv(dist);
  CHECK(csv ==
        "configuration,probability,amplitude_re,amplitude_im\n"
        "\"2,0\",0,0,0\n"
        "\"1,1\",1,1,0\n"
        "\"0,2\",0,0,0\n");

  OutputDistribution mixed(1);
  mixed.accumulate(OutputDistribution::point_mass({0}), 0.25);
  mixed.accumulate(OutputDistribution::point_mass({1}), 0.75);
  CHECK(io::distribution_csv(mixed) ==
        "configuration,probability,amplitude_re,amplitude_im\n\"0\",0.25,,\n\"1\",0.75,,\n");
}

TEST_CASE("sample CSV layout", "[io]") {
  SampleRecord rec;
  rec.trial = 4;
  rec.outcome = ModeOccupation{1, 0, 2};
  rec.branch_ideal = false;
  std::vector<SampleRecord> records{rec};
  CHECK(io::samples_csv(records) == "trial,outcome,total,branch_ideal\n4,\"1,0,2\",3,false\n");
}

TEST_CASE("format_double round-trips", "[io]") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(std::numeric_limits<double>::quiet_NaN()).empty());
  CHECK(std::stod(io::format_double(0.7290000000000001)) == 0.7290000000000001);
}

TEST_CASE("atomic writes replace the target", "[io]") {
  const auto dir = std::filesystem::temp_directory_path() / "bosim_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.csv";
  io::write_file_atomic(path, "first\n");
  io::write_file_atomic(path, "second\n");
  CHECK(io::read_file(path) == "second\n");
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    CHECK(entry.path().filename() == "out.csv");
  }
  std::filesystem::remove_all(dir);

  CHECK_THROWS_AS(io::write_file_atomic("/nonexistent_dir/x.csv", "x"), IoError);
  CHECK_THROWS_AS(io::read_file("/nonexistent_dir/x.csv"), IoError);
}
