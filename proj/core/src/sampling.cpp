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

#include "bosim/sampling.hpp"

#include <algorithm>

#include "bosim/errors.hpp"
#include "parallel.hpp"

namespace bosim {

DistributionSampler::DistributionSampler(const OutputDistribution& dist) : modes_(dist.modes()) {
  cdf_.reserve(dist.size());
  double running = 0.0;
  for (int total : dist.totals()) {
    totals_.push_back(total);
    block_start_.push_back(cdf_.size());
    for (double p : dist.block(total)) {
      running += p;
      cdf_.push_back(running);
    }
  }
  if (cdf_.empty() || !(running > 0.0)) throw InvalidArgument("cannot sample from an empty distribution");
}

ModeOccupation DistributionSampler::draw(double uniform) const {
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), uniform * cdf_.back());
  if (it == cdf_.end()) {
    // Rounding at the top end: fall back to the last entry with mass.
    it = std::prev(cdf_.end());
    while (it != cdf_.begin() && *it == *std::prev(it)) --it;
  }
  const auto index = static_cast<std::size_t>(it - cdf_.begin());
  const auto block = static_cast<std::size_t>(
      std::upper_bound(block_start_.begin(), block_start_.end(), index) - block_start_.begin() - 1);
  return configuration_unrank(totals_[block], modes_, index - block_start_[block]);
}

std::vector<ModeOccupation> sample_exact(const OutputDistribution& dist, RandomSeed seed,
                                         std::size_t count) {
  DistributionSampler sampler(dist);
  std::vector<ModeOccupation> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    CounterRng rng(seed, t);
    out.push_back(sampler.draw(rng.uniform()));
  }
  return out;
}

NoisyEnsemble::NoisyEnsemble(const UnitaryMatrix& u, const ExperimentShape& shape,
                             const NoiseModel& noise, const ComputeOptions& options)
    : shape_(shape), noise_(noise), options_(options) {
  if (shape.modes != u.modes()) throw InvalidArgument("shape mode count does not match the unitary");
  shape.validate(options.max_configurations);
  branches_ = expand_input_ensemble(shape, noise, options.max_branches);

  // Check every branch against the guard before any permanent is evaluated.
  for (const auto& b : branches_) {
    const auto count = configuration_count(b.occupation.total(), shape.modes);
    if (count > options.max_configurations) {
      throw GuardError("branch with " + std::to_string(b.occupation.total()) +
                           " photons exceeds the enumeration guard",
                       count, options.max_configurations);
    }
  }

  std::vector<std::optional<OutputDistribution>> dists(branches_.size());
  ComputeOptions serial = options;
  serial.threads = 1;
  detail::parallel_blocks(branches_.size(), options.threads,
                          [&](std::size_t begin, std::size_t end, int) {
                            for (std::size_t b = begin; b < end; ++b) {
                              dists[b] = branch_distribution(u, branches_[b], serial);
                            }
                          });
  lossless_.reserve(dists.size());
  samplers_.reserve(dists.size());
  for (auto& d : dists) {
    lossless_.push_back(std::move(*d));
    samplers_.emplace_back(lossless_.back());
  }
}

OutputDistribution NoisyEnsemble::mixture() const {
  OutputDistribution out(shape_.modes);
  for (std::size_t b = 0; b < branches_.size(); ++b) {
    out.accumulate(apply_loss(lossless_[b], noise_.eta, options_), branches_[b].weight,
                   options_.max_configurations);
  }
  return out;
}

std::vector<SampleRecord> NoisyEnsemble::sample(RandomSeed seed, std::size_t count,
                                                int threads) const {
  std::vector<double> branch_cdf;
  branch_cdf.reserve(branches_.size());
  double running = 0.0;
  for (const auto& b : branches_) branch_cdf.push_back(running += b.weight);

  std::vector<SampleRecord> records(count);
  detail::parallel_blocks(count, threads, [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t t = begin; t < end; ++t) {
      CounterRng rng(seed, t);
      const double pick = rng.uniform() * branch_cdf.back();
      auto it = std::upper_bound(branch_cdf.begin(), branch_cdf.end(), pick);
      if (it == branch_cdf.end()) --it;
      const auto b = static_cast<std::size_t>(it - branch_cdf.begin());
      auto outcome = samplers_[b].draw(rng.uniform());
      if (noise_.eta < 1.0) {
        std::vector<int> kept(outcome.counts().begin(), outcome.counts().end());
        for (auto& c : kept) {
          const int photons = c;
          for (int k = 0; k < photons; ++k) {
            if (!(rng.uniform() < noise_.eta)) --c;
          }
        }
        outcome = ModeOccupation(std::move(kept));
      }
      auto& rec = records[t];
      rec.trial = t;
      rec.outcome = std::move(outcome);
      rec.branch = b;
      rec.branch_input = branches_[b].occupation;
      rec.branch_ideal = branches_[b].ideal;
    }
  });
  return records;
}

OutputDistribution noisy_distribution(const UnitaryMatrix& u, const ExperimentShape& shape,
                                      const NoiseModel& noise, const ComputeOptions& options) {
  return NoisyEnsemble(u, shape, noise, options).mixture();
}

std::vector<SampleRecord> sample_noisy(const UnitaryMatrix& u, const ExperimentShape& shape,
                                       const NoiseModel& noise, RandomSeed seed, std::size_t count,
                                       const ComputeOptions& options) {
  return NoisyEnsemble(u, shape, noise, options).sample(seed, count, options.threads);
}

PostselectionResult postselect(std::span<const SampleRecord> samples, int photons) {
  PostselectionResult result;
  for (const auto& s : samples) {
    if (s.outcome.total() == photons) result.kept.push_back(s);
  }
  result.success_rate = samples.empty()
                            ? 0.0
                            : static_cast<double>(result.kept.size()) /
                                  static_cast<double>(samples.size());
  return result;
}

PostselectedDistribution postselect_exact(const OutputDistribution& noisy, int photons) {
  auto kept = noisy.restricted_to_total(photons);
  const double mass = kept.total_probability();
  if (!(mass > 0.0)) {
    throw InvalidArgument("post-selection retains no probability mass");
  }
  // No mass elsewhere: the event is certain and the block is returned as is.
  if (noisy.total_probability() == mass) return {std::move(kept), 1.0};
  OutputDistribution normalized(noisy.modes());
  normalized.accumulate(kept, 1.0 / mass);
  // Summation can overshoot 1 by a few ulps.
  return {std::move(normalized), std::min(mass, 1.0)};
}

PostselectedDistribution postselected_distribution(const UnitaryMatrix& u,
                                                   const ExperimentShape& shape,
                                                   const NoiseModel& noise,
                                                   const ComputeOptions& options) {
  return postselect_exact(noisy_distribution(u, shape, noise, options), shape.photons);
}

}  // namespace bosim
