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

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bosim/fock.hpp"
#include "bosim/interferometer.hpp"
#include "bosim/options.hpp"

namespace bosim {

inline constexpr double kNormalizationTolerance = 1e-9;

/// Probability distribution over output configurations of a fixed mode
/// count.
///
/// Probabilities are stored as one dense block per photon total, indexed by
/// configuration_rank(). Iteration visits totals in ascending order and,
/// within a total, configurations in enumeration (descending-lexicographic)
/// order. Pure-input distributions also retain their amplitudes.
class OutputDistribution {
 public:
  explicit OutputDistribution(int modes);

  /// All probability mass on `occ`.
  static OutputDistribution point_mass(const ModeOccupation& occ);

  /// Pure distribution over all configurations of `photons` photons, given
  /// amplitudes in enumeration order. Probabilities are |amplitude|^2.
  static OutputDistribution from_amplitudes(int photons, int modes,
                                            std::vector<Complex> amplitudes);

  int modes() const noexcept { return modes_; }
  std::vector<int> totals() const;
  bool has_block(int total) const { return blocks_.contains(total); }

  double probability(const ModeOccupation& occ) const;
  std::optional<Complex> amplitude(const ModeOccupation& occ) const;
  bool has_amplitudes() const noexcept { return !amplitudes_.empty(); }

  /// Dense probabilities for one photon total in rank order; empty if the
  /// total carries no block.
  std::span<const double> block(int total) const;

  /// Zero-initialized block for `total`, created on first access. Writing
  /// through it drops any retained amplitudes.
  std::span<double> mutable_block(int total,
                                  std::uint64_t max_configurations = kDefaultConfigurationGuard);

  /// this += weight * other, entry by entry.
  void accumulate(const OutputDistribution& other, double weight,
                  std::uint64_t max_configurations = kDefaultConfigurationGuard);

  /// Sum of all probabilities.
  double total_probability() const;
  /// sum_S P(S) * |S|.
  double expected_total() const;
  /// Number of stored entries, including zeros.
  std::uint64_t size() const;

  /// The mass on configurations with `total` photons, as a new distribution
  /// (not renormalized).
  OutputDistribution restricted_to_total(int total) const;

  /// Throws ConsistencyError unless total_probability() is within `tol` of 1.
  void check_normalized(double tol = kNormalizationTolerance) const;

  /// Calls f(counts, probability) for every stored entry in iteration order;
  /// `counts` is a transient span over the configuration.
  template <class F>
  void for_each(F&& f) const {
    std::vector<int> counts(static_cast<std::size_t>(modes_));
    for (const auto& [total, probs] : blocks_) {
      std::fill(counts.begin(), counts.end(), 0);
      counts[0] = total;
      for (double p : probs) {
        f(std::span<const int>(counts), p);
        next_configuration(counts);
      }
    }
  }

 private:
  int modes_;
  std::map<int, std::vector<double>> blocks_;
  std::vector<Complex> amplitudes_;  // only for a single pure block
};

/// Per(build_scattering_submatrix(u, input, output)) / sqrt(prod s_i! prod t_j!).
Complex amplitude(const UnitaryMatrix& u, const ModeOccupation& input,
                  const ModeOccupation& output);

/// Exact output distribution of indistinguishable photons prepared in
/// `input`. Every configuration is evaluated; the sum of probabilities is
/// checked (not renormalized) against 1.
OutputDistribution output_distribution(const UnitaryMatrix& u, const ModeOccupation& input,
                                       const ComputeOptions& options = {});

}  // namespace bosim
