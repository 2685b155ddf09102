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

// End-to-end checks of the bosim executable: exit codes, output files and
// reproducibility.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fixture(const std::string& name) { return fs::path(BOSIM_CLI_FIXTURES) / name; }

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path(BOSIM_CLI_WORKDIR) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path logs = fs::path(BOSIM_CLI_WORKDIR) / "logs";
  fs::create_directories(logs);
  const auto out = logs / "stdout.txt";
  const auto err = logs / "stderr.txt";
  const std::string cmd = std::string("\"") + BOSIM_CLI_PATH + "\" " + args + " >\"" + out.string() +
                          "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

// Rows after the header, keyed by column name.
std::vector<std::vector<std::string>> rows(const fs::path& csv, std::vector<std::string>* header) {
  auto all = lines(slurp(csv));
  REQUIRE_FALSE(all.empty());
  *header = split(all.front());
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 1; i < all.size(); ++i) out.push_back(split(all[i]));
  return out;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

}  // namespace

TEST_CASE("permanent subcommand", "[cli]") {
  SECTION("identity prints [1, 0]") {
    const auto r = run("permanent " + q(fixture("identity3.json")));
    CHECK(r.code == 0);
    CHECK(r.out == "[1, 0]\n");
  }
  SECTION("malformed JSON names the line and exits 2") {
    const auto r = run("permanent " + q(fixture("malformed.json")));
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
  }
  SECTION("31x31 trips the guard and exits 3") {
    const auto dir = fresh_dir("perm31");
    std::ostringstream json;
    json << "[";
    for (int r = 0; r < 31; ++r) {
      json << (r ? "," : "") << "[";
      for (int c = 0; c < 31; ++c) json << (c ? "," : "") << (r == c ? "[1,0]" : "[0,0]");
      json << "]";
    }
    json << "]";
    std::ofstream(dir / "big.json") << json.str();
    const auto r = run("permanent " + q(dir / "big.json"));
    CHECK(r.code == 3);
    CHECK(r.err.find("limit 30") != std::string::npos);
  }
  SECTION("missing file exits 4") {
    CHECK(run("permanent " + q(fixture("does_not_exist.json"))).code == 4);
  }
}

TEST_CASE("distribution subcommand", "[cli]") {
  std::vector<std::string> header;

  SECTION("HOM: the (1,1) row has probability 0") {
    const auto dir = fresh_dir("hom");
    REQUIRE(run("distribution --config " + q(fixture("hom.json")) + " --out " + q(dir)).code == 0);
    const auto data = rows(dir / "distribution.csv", &header);
    const auto conf = column(header, "configuration");
    const auto prob = column(header, "probability");
    bool found = false;
    for (const auto& row : data) {
      if (row[conf] == "1,1") {
        found = true;
        CHECK(std::abs(std::stod(row[prob])) <= 1e-12);
      }
    }
    CHECK(found);
  }

  SECTION("identity circuit gives a single row of probability 1") {
    const auto dir = fresh_dir("identity");
    REQUIRE(run("distribution --config " + q(fixture("identity_circuit.json")) + " --out " + q(dir)).code ==
            0);
    const auto data = rows(dir / "distribution.csv", &header);
    const auto prob = column(header, "probability");
    int nonzero = 0;
    for (const auto& row : data) {
      const double p = std::stod(row[prob]);
      if (p > 1e-15) {
        ++nonzero;
        CHECK(std::abs(p - 1.0) <= 1e-12);
        CHECK(row[column(header, "configuration")] == "1,0,1,0");
      }
    }
    CHECK(nonzero == 1);
  }

  SECTION("probability column sums to 1 for noisy Haar and file circuits") {
    for (const char* cfg : {"haar_noisy.json", "circuit_file.json", "hom.json"}) {
      const auto dir = fresh_dir("sum");
      REQUIRE(run("distribution --config " + q(fixture(cfg)) + " --out " + q(dir)).code == 0);
      const auto data = rows(dir / "distribution.csv", &header);
      const auto prob = column(header, "probability");
      double sum = 0.0;
      for (const auto& row : data) sum += std::stod(row[prob]);
      INFO(cfg);
      CHECK(std::abs(sum - 1.0) <= 1e-9);
    }
  }

  SECTION("config errors exit 2") {
    const auto dir = fresh_dir("bad");
    for (const char* cfg : {"unknown_field.json", "two_sources.json", "bad_index.json", "malformed.json"}) {
      INFO(cfg);
      CHECK(run("distribution --config " + q(fixture(cfg)) + " --out " + q(dir)).code == 2);
    }
    const auto r = run("distribution --config " + q(fixture("unknown_field.json")) + " --out " + q(dir));
    CHECK(r.err.find("pp") != std::string::npos);
    CHECK(run("distribution --out " + q(dir)).code == 2);
    CHECK(run("frobnicate").code == 2);
  }

  SECTION("oversized shape exits 3 before computing") {
    const auto dir = fresh_dir("guard");
    CHECK(run("distribution --config " + q(fixture("too_large.json")) + " --out " + q(dir)).code == 3);
    CHECK(fs::is_empty(dir));
  }

  SECTION("unwritable output exits 4") {
    const auto dir = fresh_dir("io");
    std::ofstream(dir / "blocker") << "x";
    CHECK(run("distribution --config " + q(fixture("hom.json")) + " --out " + q(dir / "blocker" / "sub"))
              .code == 4);
    CHECK(run("distribution --config " + q(fixture("missing.json")) + " --out " + q(dir)).code == 4);
  }
}

TEST_CASE("sample subcommand", "[cli]") {
  const auto a = fresh_dir("sample_a");
  const auto b = fresh_dir("sample_b");
  REQUIRE(run("sample --config " + q(fixture("haar_noisy.json")) + " --out " + q(a)).code == 0);
  REQUIRE(run("sample --config " + q(fixture("haar_noisy.json")) + " --out " + q(b)).code == 0);
  CHECK(slurp(a / "samples.csv") == slurp(b / "samples.csv"));
  CHECK(slurp(a / "sample_summary.json") == slurp(b / "sample_summary.json"));

  std::vector<std::string> header;
  const auto data = rows(a / "samples.csv", &header);
  CHECK(data.size() == 2000);
  CHECK(header == std::vector<std::string>{"trial", "outcome", "total", "branch_ideal"});

  const auto summary = slurp(a / "sample_summary.json");
  CHECK(summary.find("\"seed\": 5") != std::string::npos);
  CHECK(summary.find("\"version\"") != std::string::npos);

  const auto c = fresh_dir("sample_c");
  REQUIRE(run("sample --config " + q(fixture("haar_noisy.json")) + " --seed 6 --out " + q(c)).code == 0);
  CHECK(slurp(a / "samples.csv") != slurp(c / "samples.csv"));

  const auto d = fresh_dir("sample_d");
  REQUIRE(run("sample --config " + q(fixture("haar_noisy.json")) + " --threads 3 --out " + q(d)).code == 0);
  CHECK(slurp(a / "samples.csv") == slurp(d / "samples.csv"));
}

TEST_CASE("scaling subcommand", "[cli]") {
  std::vector<std::string> header;

  SECTION("p = 1 gives zero TVD columns and is reproducible") {
    const auto a = fresh_dir("scaling_a");
    const auto b = fresh_dir("scaling_b");
    REQUIRE(run("scaling --config " + q(fixture("scaling_p1.json")) + " --out " + q(a)).code == 0);
    REQUIRE(run("scaling --config " + q(fixture("scaling_p1.json")) + " --out " + q(b)).code == 0);
    CHECK(slurp(a / "scaling.csv") == slurp(b / "scaling.csv"));
    CHECK(slurp(a / "scaling_summary.json") == slurp(b / "scaling_summary.json"));
    const auto data = rows(a / "scaling.csv", &header);
    REQUIRE(data.size() == 3);
    for (const auto& row : data) {
      CHECK(std::stod(row[column(header, "tvd_ideal_noisy")]) == 0.0);
      CHECK(std::stod(row[column(header, "tvd_ideal_postselected")]) == 0.0);
    }
  }

  SECTION("default configuration reports p^n") {
    const auto dir = fresh_dir("scaling_default");
    REQUIRE(run("scaling --out " + q(dir)).code == 0);
    const auto data = rows(dir / "scaling.csv", &header);
    REQUIRE(data.size() == 4);
    const double expected[] = {0.9, 0.81, 0.729, 0.6561};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(std::abs(std::stod(data[i][column(header, "analytic_ideal_probability")]) - expected[i]) <= 1e-12);
      CHECK(data[i][column(header, "m")] == std::to_string((i + 1) * (i + 1)));
    }
  }
}

TEST_CASE("filter subcommand", "[cli]") {
  const auto dir = fresh_dir("filter");
  REQUIRE(run("filter --config " + q(fixture("filter_small.json")) + " --out " + q(dir)).code == 0);
  std::vector<std::string> header;
  const auto data = rows(dir / "filter.csv", &header);
  REQUIRE(data.size() == 3);
  const double expected[] = {0.5, 0.25, 0.125};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(std::stod(data[i][column(header, "analytic_success")]) - expected[i]) <= 1e-12);
    const double emp = std::stod(data[i][column(header, "empirical_success")]);
    CHECK(std::abs(emp - expected[i]) <= 3.0 * std::sqrt(expected[i] * (1 - expected[i]) / 5000.0));
  }
  CHECK(fs::exists(dir / "filter_summary.json"));
}
