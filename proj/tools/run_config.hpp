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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bosim/experiments.hpp"
#include "bosim/interferometer.hpp"
#include "bosim/noise.hpp"

namespace bosim::cli {

enum class Command { kDistribution, kSample, kScaling, kFilter };

/// Everything one invocation needs, parsed from the --config file and
/// command-line overrides. Circuit sources: exactly one of "circuit",
/// "circuit_file" or "haar_seed" for distribution/sample, none for the
/// experiment drivers (they draw their own unitaries).
struct RunConfig {
  Command command = Command::kDistribution;
  std::optional<ExperimentShape> shape;
  std::optional<ModeOccupation> input;
  std::optional<std::vector<OpticalElement>> circuit;
  std::optional<std::uint64_t> haar_seed;
  NoiseModel noise;
  std::size_t trials = 100'000;
  std::uint64_t seed = 1;
  ComputeOptions options;
  ScalingConfig scaling;
  FilterConfig filter;
  std::filesystem::path out_dir = ".";

  UnitaryMatrix unitary() const;
  ModeOccupation input_occupation() const;
  nlohmann::json metadata() const;
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<std::filesystem::path> out_dir;
};

/// Parses and validates. Raises ParseError / InvalidArgument for bad
/// fields, GuardError for parameters beyond the guards, IoError for
/// unreadable files. No heavy computation happens here.
RunConfig load_run_config(Command command, const std::optional<std::filesystem::path>& path,
                          const Overrides& overrides);

}  // namespace bosim::cli
