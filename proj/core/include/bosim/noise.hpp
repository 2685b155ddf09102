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

#include <vector>

#include "bosim/distribution.hpp"

namespace bosim {

/// What the (1 - p) error branch of each input mode contains.
enum class ErrorChannel {
  /// Photon-number error: vacuum with probability p0, a photon pair with p2.
  kNumber,
  /// A single photon in a spectral mode orthogonal to the common one.
  kDistinguishability,
};

/// Independent per-mode input error model.
///
/// Each of the n input modes independently holds the intended single photon
/// with probability p (or per_mode_p[i] when given) and the error state
/// otherwise. `eta` is a lumped per-photon survival probability applied
/// before detection.
struct NoiseModel {
  double p = 1.0;
  double p0 = 1.0;
  double p2 = 0.0;
  ErrorChannel channel = ErrorChannel::kNumber;
  double eta = 1.0;
  std::vector<double> per_mode_p;

  double ideal_probability(int mode) const;

  /// Throws InvalidArgument on probabilities outside [0, 1], p0 + p2 != 1,
  /// or per_mode_p shorter than `photons`.
  void validate(int photons) const;
};

/// Photon `photon` (0-based within its mode) injected into input mode `mode`.
struct PhotonLabel {
  int mode = 0;
  int photon = 0;
  friend bool operator==(const PhotonLabel&, const PhotonLabel&) = default;
};

/// One classical term of the expanded input mixture.
struct InputBranch {
  ModeOccupation occupation;
  double weight = 0.0;
  /// Photons in an orthogonal spectral mode (distinguishability channel only).
  std::vector<PhotonLabel> distinguishable_photons;
  /// True for the all-ideal |1,...,1,0,...,0> branch.
  bool ideal = false;
};

/// Expands prod_i [p |1><1| + (1 - p) rho_error] over the first n modes.
///
/// Branches are listed in mixed-radix order with mode 0 most significant and
/// per-mode options ordered (ideal, vacuum, pair) or (ideal, orthogonal);
/// zero-weight options are skipped, so the first branch is always the
/// all-ideal one. Weights are left-to-right products over modes.
std::vector<InputBranch> expand_input_ensemble(const ExperimentShape& shape,
                                               const NoiseModel& noise,
                                               std::uint64_t max_branches = kDefaultEnsembleGuard);

/// p^n, evaluated with the same product as the all-ideal branch weight.
double ideal_component_probability(const NoiseModel& noise, int photons);

/// Fully distinguishable photons: P(S) = Per(|U_{S,T}|^2) / prod_i s_i!.
/// Cross-checked against independent single-photon transits; a mismatch
/// throws ConsistencyError.
OutputDistribution distinguishable_distribution(const UnitaryMatrix& u, const ModeOccupation& input,
                                                const ComputeOptions& options = {});

/// Output of one input branch: indistinguishable photons interfere, photons
/// listed in distinguishable_photons are convolved in as classical transits.
/// No loss is applied.
OutputDistribution branch_distribution(const UnitaryMatrix& u, const InputBranch& branch,
                                       const ComputeOptions& options = {});

/// Mixture over all subsets G of photons sharing the common spectral mode,
/// weight p^|G| (1-p)^(n-|G|).
OutputDistribution partial_distinguishability_distribution(const UnitaryMatrix& u,
                                                           const ExperimentShape& shape, double p,
                                                           const ComputeOptions& options = {});

/// Binomial thinning: every photon of every outcome survives independently
/// with probability eta.
OutputDistribution apply_loss(const OutputDistribution& dist, double eta,
                              const ComputeOptions& options = {});

/// Convolves `dist` with one classical photon entering `input_mode`.
OutputDistribution add_classical_photon(const OutputDistribution& dist, const UnitaryMatrix& u,
                                        int input_mode, const ComputeOptions& options = {});

}  // namespace bosim
