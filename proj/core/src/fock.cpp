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

#include "bosim/fock.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "bosim/errors.hpp"

namespace bosim {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// Weak compositions of `total` into `parts` parts.
std::uint64_t compositions(int total, int parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  return configuration_count(total, parts);
}

}  // namespace

ModeOccupation::ModeOccupation(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw InvalidArgument("mode occupation has a negative photon count");
    total_ += c;
  }
}

ModeOccupation::ModeOccupation(std::initializer_list<int> counts)
    : ModeOccupation(std::vector<int>(counts)) {}

ModeOccupation ModeOccupation::single_photons(int photons, int modes) {
  if (photons < 0 || modes < 0 || photons > modes) {
    throw InvalidArgument("single-photon input needs 0 <= photons <= modes");
  }
  std::vector<int> counts(static_cast<std::size_t>(modes), 0);
  std::fill_n(counts.begin(), photons, 1);
  return ModeOccupation(std::move(counts));
}

ModeOccupation ModeOccupation::vacuum(int modes) {
  return ModeOccupation(std::vector<int>(static_cast<std::size_t>(modes), 0));
}

ModeOccupation ModeOccupation::parse(std::string_view text) {
  std::vector<int> counts;
  while (true) {
    auto comma = text.find(',');
    auto field = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError("invalid mode occupation field '" + std::string(field) + "'");
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ModeOccupation(std::move(counts));
}

bool ModeOccupation::collision_free() const noexcept {
  return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c <= 1; });
}

std::string ModeOccupation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out;
}

void ExperimentShape::validate(std::uint64_t max_configurations) const {
  if (photons < 1 || modes < 1 || photons > modes) {
    throw InvalidArgument("experiment shape needs 1 <= n <= m (got n=" +
                          std::to_string(photons) + ", m=" + std::to_string(modes) + ")");
  }
  auto count = configuration_count(photons, modes);
  if (count > max_configurations) {
    throw GuardError("output space of n=" + std::to_string(photons) +
                         ", m=" + std::to_string(modes) + " exceeds the enumeration guard",
                     count, max_configurations);
  }
}

std::uint64_t configuration_count(int photons, int modes) {
  if (photons < 0 || modes < 1) {
    throw InvalidArgument("configuration count needs photons >= 0 and modes >= 1");
  }
  // C(photons + modes - 1, k) with k the smaller of the two lower indices.
  const std::uint64_t top = static_cast<std::uint64_t>(photons) + modes - 1;
  const std::uint64_t k = std::min<std::uint64_t>(photons, modes - 1);
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (top - k + i) / i;
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<ModeOccupation> enumerate_configurations(int photons, int modes,
                                                     std::uint64_t max_configurations) {
  auto count = configuration_count(photons, modes);
  if (count > max_configurations) {
    throw GuardError("enumerating " + std::to_string(photons) + " photons over " +
                         std::to_string(modes) + " modes exceeds the enumeration guard",
                     count, max_configurations);
  }
  std::vector<ModeOccupation> out;
  out.reserve(count);
  std::vector<int> counts(static_cast<std::size_t>(modes), 0);
  counts[0] = photons;
  do {
    out.emplace_back(counts);
  } while (next_configuration(counts));
  return out;
}

bool next_configuration(std::span<int> counts) {
  if (counts.size() < 2) return false;
  // Move one photon out of the last non-empty mode before the final one and
  // gather everything to its right into the adjacent mode.
  std::size_t i = counts.size() - 1;
  int tail = counts[i];
  do {
    --i;
    if (counts[i] > 0) {
      --counts[i];
      counts[i + 1] = tail + 1;
      if (i + 2 < counts.size()) counts[counts.size() - 1] = 0;
      return true;
    }
  } while (i > 0);
  return false;
}

std::uint64_t configuration_rank(std::span<const int> counts) {
  const int modes = static_cast<int>(counts.size());
  int remaining = std::accumulate(counts.begin(), counts.end(), 0);
  std::uint64_t rank = 0;
  for (int i = 0; i + 1 < modes; ++i) {
    // Configurations agreeing on modes < i but holding more photons in
    // mode i precede this one.
    for (int v = counts[static_cast<std::size_t>(i)] + 1; v <= remaining; ++v) {
      rank += compositions(remaining - v, modes - i - 1);
    }
    remaining -= counts[static_cast<std::size_t>(i)];
  }
  return rank;
}

std::uint64_t configuration_rank(const ModeOccupation& occ) {
  return configuration_rank(occ.counts());
}

ModeOccupation configuration_unrank(int photons, int modes, std::uint64_t rank) {
  if (rank >= configuration_count(photons, modes)) {
    throw InvalidArgument("configuration rank out of range");
  }
  std::vector<int> counts(static_cast<std::size_t>(modes), 0);
  int remaining = photons;
  for (int i = 0; i + 1 < modes; ++i) {
    int v = remaining;
    while (true) {
      auto block = compositions(remaining - v, modes - i - 1);
      if (rank < block) break;
      rank -= block;
      --v;
    }
    counts[static_cast<std::size_t>(i)] = v;
    remaining -= v;
  }
  counts[static_cast<std::size_t>(modes - 1)] = remaining;
  return ModeOccupation(std::move(counts));
}

std::uint64_t occupancy_factorial_product(std::span<const int> counts) {
  std::uint64_t product = 1;
  for (int c : counts) {
    if (c < 0 || c > 20) {
      throw InvalidArgument("occupancy factorial needs counts in [0, 20], got " +
                            std::to_string(c));
    }
    for (std::uint64_t f = 2; f <= static_cast<std::uint64_t>(c); ++f) {
      if (__builtin_mul_overflow(product, f, &product)) {
        throw InvalidArgument("occupancy factorial product overflows 64 bits");
      }
    }
  }
  return product;
}

std::uint64_t occupancy_factorial_product(const ModeOccupation& occ) {
  return occupancy_factorial_product(occ.counts());
}

}  // namespace bosim
