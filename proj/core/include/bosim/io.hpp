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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bosim/experiments.hpp"
#include "bosim/interferometer.hpp"
#include "bosim/sampling.hpp"

namespace bosim::io {

/// Parses JSON text. Syntax errors raise ParseError naming `source` and the
/// line and column.
nlohmann::json parse_json(std::string_view text, const std::string& source);

/// Square matrix as an array of rows, each an array of [re, im] pairs.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);
nlohmann::json complex_to_json(Complex z);

/// {"kind":"bs","i":0,"j":1,"theta":..,"phi":..} / {"kind":"ps","i":2,"phi":..}
std::vector<OpticalElement> circuit_from_json(const nlohmann::json& j);
nlohmann::json circuit_to_json(const std::vector<OpticalElement>& circuit);

/// {"p":0.9,"p0":0.5,"p2":0.5,"mode":"number"|"distinguishability","eta":0.95}
/// plus an optional "per_mode_p" array. Missing keys keep NoiseModel defaults.
NoiseModel noise_from_json(const nlohmann::json& j);
nlohmann::json noise_to_json(const NoiseModel& noise);

/// Shortest decimal string that round-trips; empty for NaN.
std::string format_double(double value);

/// configuration,probability,amplitude_re,amplitude_im in iteration order.
/// Configurations are quoted ("1,0,2"); amplitude fields are empty when the
/// distribution carries none.
std::string distribution_csv(const OutputDistribution& dist);

/// trial,outcome,total,branch_ideal
std::string samples_csv(std::span<const SampleRecord> samples);

std::string scaling_csv(std::span<const ScalingRow> rows);
std::string filter_csv(std::span<const FilterRow> rows);

std::string read_file(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over `path`, so readers
/// never observe a partial file. Raises IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace bosim::io
