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
#include <string>
#include <string_view>
#include <vector>

#include "bosim/noise.hpp"

namespace bosim {

/// Mode count as a function of photon number: either m = n^2 or m = k n.
class ModeCountRule {
 public:
  static ModeCountRule square() { return ModeCountRule(0); }
  static ModeCountRule linear(int factor);
  /// Accepts "n^2" or "<k>n" (e.g. "2n"; "n" means k = 1).
  static ModeCountRule parse(std::string_view text);

  int modes(int photons) const;
  std::string to_string() const;

  friend bool operator==(const ModeCountRule&, const ModeCountRule&) = default;

 private:
  explicit ModeCountRule(int factor) : factor_(factor) {}
  int factor_;  // 0 means square
};

/// Stream ids used by the experiment drivers, so individual draws can be
/// reproduced outside them.
std::uint64_t unitary_stream(int photons, int replica);
std::uint64_t sampling_stream(int photons, int replica);

struct ScalingConfig {
  std::vector<int> photon_counts{1, 2, 3, 4};
  ModeCountRule rule = ModeCountRule::square();
  /// noise.p is the per-photon ideal probability being scaled.
  NoiseModel noise = [] {
    NoiseModel model;
    model.p = 0.9;
    return model;
  }();
  std::size_t trials = 100'000;
  std::uint64_t seed = 1;
  /// Independent Haar unitaries averaged per row.
  int unitaries = 1;
  ComputeOptions options;
};

struct ScalingRow {
  int photons = 0;
  int modes = 0;
  double p = 0.0;
  double analytic_ideal_probability = 0.0;
  double empirical_ideal_fraction = 0.0;
  double tvd_ideal_noisy = 0.0;
  double tvd_ideal_postselected = 0.0;
  double postselection_success = 0.0;
  /// False when the row exceeded a guard; only the first four fields are set.
  bool feasible = true;
};

/// Whether (n, m) under `noise` fits the enumeration and ensemble guards.
bool experiment_feasible(int photons, int modes, const NoiseModel& noise,
                         const ComputeOptions& options);

/// One row per entry of photon_counts, in that order. For each n a seeded
/// Haar unitary on rule.modes(n) modes is drawn; the exact ideal, noisy and
/// post-selected distributions are compared and the ideal-branch fraction is
/// estimated from `trials` Monte-Carlo runs.
std::vector<ScalingRow> run_scaling_experiment(const ScalingConfig& config);

struct FilterConfig {
  double eta = 0.9;
  std::vector<int> photon_counts{1, 2, 3, 4, 5, 6};
  ModeCountRule rule = ModeCountRule::linear(2);
  std::size_t trials = 100'000;
  std::uint64_t seed = 1;
  ComputeOptions options;
};

struct FilterRow {
  int photons = 0;
  int modes = 0;
  double analytic_success = 0.0;
  double empirical_success = 0.0;
  std::size_t trials = 0;
  bool feasible = true;
};

/// Pure-loss post-selection: every source is ideal and each photon survives
/// with probability eta; success means detecting all n photons.
std::vector<FilterRow> run_filter_experiment(const FilterConfig& config);

}  // namespace bosim
