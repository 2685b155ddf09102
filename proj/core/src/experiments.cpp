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

#include "bosim/experiments.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "bosim/errors.hpp"
#include "bosim/metrics.hpp"
#include "bosim/sampling.hpp"

namespace bosim {

namespace {

constexpr std::uint64_t kUnitaryTag = 1;
constexpr std::uint64_t kSamplingTag = 2;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t stream_id(std::uint64_t tag, int photons, int replica) {
  return (tag << 48) | (static_cast<std::uint64_t>(replica) << 24) |
         static_cast<std::uint64_t>(photons);
}

}  // namespace

ModeCountRule ModeCountRule::linear(int factor) {
  if (factor < 1) throw InvalidArgument("mode-count factor must be positive");
  return ModeCountRule(factor);
}

ModeCountRule ModeCountRule::parse(std::string_view text) {
  if (text == "n^2") return square();
  if (text == "n") return linear(1);
  if (text.size() >= 2 && text.back() == 'n') {
    int factor = 0;
    auto body = text.substr(0, text.size() - 1);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), factor);
    if (ec == std::errc() && ptr == body.data() + body.size() && factor >= 1) return linear(factor);
  }
  throw ParseError("unknown mode-count rule '" + std::string(text) + "' (expected \"n^2\" or \"<k>n\")");
}

int ModeCountRule::modes(int photons) const {
  return factor_ == 0 ? photons * photons : factor_ * photons;
}

std::string ModeCountRule::to_string() const {
  if (factor_ == 0) return "n^2";
  if (factor_ == 1) return "n";
  return std::to_string(factor_) + "n";
}

std::uint64_t unitary_stream(int photons, int replica) {
  return stream_id(kUnitaryTag, photons, replica);
}

std::uint64_t sampling_stream(int photons, int replica) {
  return stream_id(kSamplingTag, photons, replica);
}

bool experiment_feasible(int photons, int modes, const NoiseModel& noise,
                         const ComputeOptions& options) {
  if (photons < 1 || photons > modes) return false;
  const bool pairs = noise.channel == ErrorChannel::kNumber && noise.p2 > 0.0;
  bool any_error = false;
  for (int i = 0; i < photons; ++i) any_error = any_error || noise.ideal_probability(i) < 1.0;
  const int max_photons = (pairs && any_error) ? 2 * photons : photons;
  if (max_photons > kRyserPermanentLimit) return false;
  for (int t = photons; t <= max_photons; ++t) {
    if (configuration_count(t, modes) > options.max_configurations) return false;
  }
  const double per_mode = noise.channel == ErrorChannel::kNumber ? 3.0 : 2.0;
  return std::pow(per_mode, photons) <= static_cast<double>(options.max_branches);
}

std::vector<ScalingRow> run_scaling_experiment(const ScalingConfig& config) {
  if (config.unitaries < 1) throw InvalidArgument("scaling experiment needs at least one unitary");
  std::vector<ScalingRow> rows;
  rows.reserve(config.photon_counts.size());
  for (int n : config.photon_counts) {
    ScalingRow row;
    row.photons = n;
    row.modes = config.rule.modes(n);
    row.p = config.noise.p;
    row.analytic_ideal_probability = ideal_component_probability(config.noise, n);
    if (!experiment_feasible(n, row.modes, config.noise, config.options)) {
      row.feasible = false;
      row.empirical_ideal_fraction = row.tvd_ideal_noisy = row.tvd_ideal_postselected =
          row.postselection_success = kNaN;
      rows.push_back(row);
      continue;
    }

    const ExperimentShape shape{n, row.modes};
    std::size_t ideal_hits = 0;
    double tvd_noisy = 0.0, tvd_post = 0.0, success = 0.0;
    for (int r = 0; r < config.unitaries; ++r) {
      const auto u = haar_random(row.modes, {config.seed, unitary_stream(n, r)});
      const auto ideal =
          output_distribution(u, ModeOccupation::single_photons(n, row.modes), config.options);
      const NoisyEnsemble ensemble(u, shape, config.noise, config.options);
      const auto noisy = ensemble.mixture();
      tvd_noisy += total_variation_distance(ideal, noisy);
      const auto kept = noisy.restricted_to_total(n).total_probability();
      if (kept > 0.0) {
        auto post = postselect_exact(noisy, n);
        tvd_post += total_variation_distance(ideal, post.distribution);
        success += post.success_probability;
      } else {
        tvd_post = kNaN;
      }
      const auto samples = ensemble.sample({config.seed, sampling_stream(n, r)}, config.trials,
                                           config.options.threads);
      for (const auto& s : samples) ideal_hits += s.branch_ideal ? 1 : 0;
    }
    const double k = config.unitaries;
    row.empirical_ideal_fraction =
        static_cast<double>(ideal_hits) / (static_cast<double>(config.trials) * k);
    row.tvd_ideal_noisy = tvd_noisy / k;
    row.tvd_ideal_postselected = tvd_post / k;
    row.postselection_success = success / k;
    rows.push_back(row);
  }
  return rows;
}

std::vector<FilterRow> run_filter_experiment(const FilterConfig& config) {
  NoiseModel noise;
  noise.p = 1.0;
  noise.eta = config.eta;
  noise.validate(0);
  std::vector<FilterRow> rows;
  rows.reserve(config.photon_counts.size());
  for (int n : config.photon_counts) {
    FilterRow row;
    row.photons = n;
    row.modes = config.rule.modes(n);
    row.trials = config.trials;
    double analytic = 1.0;
    for (int i = 0; i < n; ++i) analytic *= config.eta;
    row.analytic_success = analytic;
    if (!experiment_feasible(n, row.modes, noise, config.options)) {
      row.feasible = false;
      row.empirical_success = kNaN;
      rows.push_back(row);
      continue;
    }
    const auto u = haar_random(row.modes, {config.seed, unitary_stream(n, 0)});
    const NoisyEnsemble ensemble(u, {n, row.modes}, noise, config.options);
    const auto samples =
        ensemble.sample({config.seed, sampling_stream(n, 0)}, config.trials, config.options.threads);
    row.empirical_success = postselect(samples, n).success_rate;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bosim
