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

#include <cstddef>
#include <span>
#include <vector>

#include "bosim/noise.hpp"
#include "bosim/random.hpp"

namespace bosim {

/// Inverse-CDF sampler over a distribution's iteration order.
class DistributionSampler {
 public:
  explicit DistributionSampler(const OutputDistribution& dist);

  /// Configuration whose cumulative interval contains `uniform` in [0, 1).
  ModeOccupation draw(double uniform) const;

 private:
  int modes_;
  std::vector<double> cdf_;
  std::vector<int> totals_;            // photon total of each entry block
  std::vector<std::size_t> block_start_;
};

/// `count` independent draws; draw t uses substream t of `seed`.
std::vector<ModeOccupation> sample_exact(const OutputDistribution& dist, RandomSeed seed,
                                         std::size_t count);

struct SampleRecord {
  std::size_t trial = 0;
  ModeOccupation outcome;
  /// Index into the input ensemble and the branch's input. Diagnostic only:
  /// post-selection never reads them.
  std::size_t branch = 0;
  ModeOccupation branch_input;
  bool branch_ideal = false;
};

/// Input ensemble of a noisy experiment together with the exact output
/// distribution of every branch. Loss (eta < 1) is folded into the branch
/// distributions; the Monte-Carlo sampler instead draws lossless outcomes and
/// thins them photon by photon.
class NoisyEnsemble {
 public:
  NoisyEnsemble(const UnitaryMatrix& u, const ExperimentShape& shape, const NoiseModel& noise,
                const ComputeOptions& options = {});

  const std::vector<InputBranch>& branches() const noexcept { return branches_; }
  const ExperimentShape& shape() const noexcept { return shape_; }

  /// sum_b weight_b D_b, combined in branch order.
  OutputDistribution mixture() const;

  /// Per trial: draw a branch by weight, draw an outcome from that branch,
  /// then drop each photon independently with probability 1 - eta. Trial t
  /// uses substream t of `seed`, so the stream is independent of `threads`.
  std::vector<SampleRecord> sample(RandomSeed seed, std::size_t count, int threads = 1) const;

 private:
  ExperimentShape shape_;
  NoiseModel noise_;
  ComputeOptions options_;
  std::vector<InputBranch> branches_;
  std::vector<OutputDistribution> lossless_;
  std::vector<DistributionSampler> samplers_;
};

/// Exact mixed output distribution of the noisy experiment (loss included).
OutputDistribution noisy_distribution(const UnitaryMatrix& u, const ExperimentShape& shape,
                                      const NoiseModel& noise, const ComputeOptions& options = {});

std::vector<SampleRecord> sample_noisy(const UnitaryMatrix& u, const ExperimentShape& shape,
                                       const NoiseModel& noise, RandomSeed seed, std::size_t count,
                                       const ComputeOptions& options = {});

struct PostselectionResult {
  std::vector<SampleRecord> kept;
  double success_rate = 0.0;
};

/// Keeps the records whose detected photon total equals `photons`.
PostselectionResult postselect(std::span<const SampleRecord> samples, int photons);

struct PostselectedDistribution {
  OutputDistribution distribution;
  double success_probability = 0.0;
};

/// Exact distribution conditioned on detecting shape.photons photons.
PostselectedDistribution postselect_exact(const OutputDistribution& noisy, int photons);

PostselectedDistribution postselected_distribution(const UnitaryMatrix& u,
                                                   const ExperimentShape& shape,
                                                   const NoiseModel& noise,
                                                   const ComputeOptions& options = {});

}  // namespace bosim
