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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bosim/options.hpp"

namespace bosim {

/// Photon counts per mode for one input or output configuration.
class ModeOccupation {
 public:
  ModeOccupation() = default;
  explicit ModeOccupation(std::vector<int> counts);
  ModeOccupation(std::initializer_list<int> counts);

  /// |1,...,1,0,...,0> with `photons` leading ones over `modes` modes.
  static ModeOccupation single_photons(int photons, int modes);
  static ModeOccupation vacuum(int modes);

  /// Parses the comma-separated form produced by to_string(), e.g. "1,0,2".
  static ModeOccupation parse(std::string_view text);

  int modes() const noexcept { return static_cast<int>(counts_.size()); }
  int total() const noexcept { return total_; }
  int operator[](int mode) const { return counts_[static_cast<std::size_t>(mode)]; }
  std::span<const int> counts() const noexcept { return counts_; }
  bool collision_free() const noexcept;

  std::string to_string() const;

  friend bool operator==(const ModeOccupation&, const ModeOccupation&) = default;
  friend auto operator<=>(const ModeOccupation& a, const ModeOccupation& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<int> counts_;
  int total_ = 0;
};

/// n photons over m modes, with the ideal input on the first n modes.
struct ExperimentShape {
  int photons = 0;
  int modes = 1;

  /// Throws InvalidArgument unless 1 <= photons <= modes, and GuardError
  /// when the output space exceeds `max_configurations`.
  void validate(std::uint64_t max_configurations = kDefaultConfigurationGuard) const;
};

/// Number of weak compositions of `photons` into `modes` parts,
/// C(photons + modes - 1, modes - 1). Saturates at UINT64_MAX.
std::uint64_t configuration_count(int photons, int modes);

/// All configurations of `photons` over `modes`, in descending
/// lexicographic order, so (n,0,...,0) comes first and (0,...,0,n) last.
std::vector<ModeOccupation> enumerate_configurations(
    int photons, int modes,
    std::uint64_t max_configurations = kDefaultConfigurationGuard);

/// Advances `counts` in place to its descending-lexicographic successor.
/// Returns false (leaving `counts` unspecified) after the last one.
bool next_configuration(std::span<int> counts);

/// Position of `occ` in enumerate_configurations(occ.total(), occ.modes()).
std::uint64_t configuration_rank(const ModeOccupation& occ);
std::uint64_t configuration_rank(std::span<const int> counts);

/// Inverse of configuration_rank.
ModeOccupation configuration_unrank(int photons, int modes, std::uint64_t rank);

/// prod_i counts[i]!. Throws InvalidArgument for any count above 20.
std::uint64_t occupancy_factorial_product(const ModeOccupation& occ);
std::uint64_t occupancy_factorial_product(std::span<const int> counts);

}  // namespace bosim
