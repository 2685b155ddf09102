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

#include "bosim/distribution.hpp"

#include <cmath>
#include <string>

#include "bosim/errors.hpp"
#include "parallel.hpp"

namespace bosim {

OutputDistribution::OutputDistribution(int modes) : modes_(modes) {
  if (modes < 1) throw InvalidArgument("distribution needs at least one mode");
}

OutputDistribution OutputDistribution::point_mass(const ModeOccupation& occ) {
  OutputDistribution d(occ.modes());
  d.mutable_block(occ.total())[configuration_rank(occ)] = 1.0;
  return d;
}

OutputDistribution OutputDistribution::from_amplitudes(int photons, int modes,
                                                       std::vector<Complex> amplitudes) {
  if (amplitudes.size() != configuration_count(photons, modes)) {
    throw InvalidArgument("amplitude vector length does not match the configuration count");
  }
  OutputDistribution d(modes);
  auto& probs = d.blocks_[photons];
  probs.resize(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) probs[i] = std::norm(amplitudes[i]);
  d.amplitudes_ = std::move(amplitudes);
  return d;
}

std::vector<int> OutputDistribution::totals() const {
  std::vector<int> out;
  for (const auto& [total, _] : blocks_) out.push_back(total);
  return out;
}

double OutputDistribution::probability(const ModeOccupation& occ) const {
  if (occ.modes() != modes_) throw InvalidArgument("configuration mode count mismatch");
  auto it = blocks_.find(occ.total());
  if (it == blocks_.end()) return 0.0;
  return it->second[configuration_rank(occ)];
}

std::optional<Complex> OutputDistribution::amplitude(const ModeOccupation& occ) const {
  if (amplitudes_.empty() || occ.modes() != modes_) return std::nullopt;
  const int total = blocks_.begin()->first;
  if (occ.total() != total) return Complex{};
  return amplitudes_[configuration_rank(occ)];
}

std::span<const double> OutputDistribution::block(int total) const {
  auto it = blocks_.find(total);
  if (it == blocks_.end()) return {};
  return it->second;
}

std::span<double> OutputDistribution::mutable_block(int total, std::uint64_t max_configurations) {
  amplitudes_.clear();
  auto it = blocks_.find(total);
  if (it != blocks_.end()) return it->second;
  const auto count = configuration_count(total, modes_);
  if (count > max_configurations) {
    throw GuardError("distribution block of " + std::to_string(total) + " photons over " +
                         std::to_string(modes_) + " modes exceeds the enumeration guard",
                     count, max_configurations);
  }
  auto& probs = blocks_[total];
  probs.assign(count, 0.0);
  return probs;
}

void OutputDistribution::accumulate(const OutputDistribution& other, double weight,
                                    std::uint64_t max_configurations) {
  if (other.modes_ != modes_) throw InvalidArgument("cannot mix distributions of different mode counts");
  for (const auto& [total, probs] : other.blocks_) {
    auto target = mutable_block(total, max_configurations);
    for (std::size_t i = 0; i < probs.size(); ++i) target[i] += weight * probs[i];
  }
}

double OutputDistribution::total_probability() const {
  double sum = 0.0;
  for (const auto& [_, probs] : blocks_) {
    for (double p : probs) sum += p;
  }
  return sum;
}

double OutputDistribution::expected_total() const {
  double sum = 0.0;
  for (const auto& [total, probs] : blocks_) {
    double mass = 0.0;
    for (double p : probs) mass += p;
    sum += total * mass;
  }
  return sum;
}

std::uint64_t OutputDistribution::size() const {
  std::uint64_t n = 0;
  for (const auto& [_, probs] : blocks_) n += probs.size();
  return n;
}

OutputDistribution OutputDistribution::restricted_to_total(int total) const {
  OutputDistribution out(modes_);
  auto it = blocks_.find(total);
  if (it != blocks_.end()) out.blocks_.emplace(total, it->second);
  else out.mutable_block(total);
  return out;
}

void OutputDistribution::check_normalized(double tol) const {
  const double sum = total_probability();
  if (!(std::abs(sum - 1.0) <= tol)) {
    throw ConsistencyError("distribution sums to " + std::to_string(sum) + ", not 1");
  }
}

Complex amplitude(const UnitaryMatrix& u, const ModeOccupation& input,
                  const ModeOccupation& output) {
  auto sub = build_scattering_submatrix(u.matrix(), input, output);
  const double norm = std::sqrt(static_cast<double>(occupancy_factorial_product(input)) *
                                static_cast<double>(occupancy_factorial_product(output)));
  return permanent_ryser(sub) / norm;
}

OutputDistribution output_distribution(const UnitaryMatrix& u, const ModeOccupation& input,
                                       const ComputeOptions& options) {
  const int m = u.modes();
  if (input.modes() != m) throw InvalidArgument("input occupation mode count does not match the unitary");
  const int k = input.total();
  if (k > kRyserPermanentLimit) {
    throw GuardError("photon number above the permanent guard", static_cast<std::uint64_t>(k),
                     kRyserPermanentLimit);
  }
  const auto count = configuration_count(k, m);
  if (count > options.max_configurations) {
    throw GuardError("output space of " + std::to_string(k) + " photons over " +
                         std::to_string(m) + " modes exceeds the enumeration guard",
                     count, options.max_configurations);
  }

  // Columns of u repeated by input occupation; each output configuration
  // then only selects (and repeats) rows.
  ComplexMatrix columns(m, k);
  for (int j = 0, c = 0; j < m; ++j) {
    for (int r = 0; r < input[j]; ++r) columns.col(c++) = u.matrix().col(j);
  }
  const double input_norm = static_cast<double>(occupancy_factorial_product(input));

  std::vector<Complex> amplitudes(count);
  detail::parallel_blocks(count, options.threads, [&](std::size_t begin, std::size_t end, int) {
    if (begin >= end) return;
    auto occ = configuration_unrank(k, m, begin);
    std::vector<int> counts(occ.counts().begin(), occ.counts().end());
    ComplexMatrix sub(k, k);
    for (std::size_t idx = begin; idx < end; ++idx) {
      for (int i = 0, r = 0; i < m; ++i) {
        for (int rep = 0; rep < counts[static_cast<std::size_t>(i)]; ++rep) sub.row(r++) = columns.row(i);
      }
      const double norm = std::sqrt(input_norm * static_cast<double>(occupancy_factorial_product(counts)));
      amplitudes[idx] = detail::ryser_kernel(sub.data(), k, sub.outerStride(), 1) / norm;
      next_configuration(counts);
    }
  });

  auto dist = OutputDistribution::from_amplitudes(k, m, std::move(amplitudes));
  dist.check_normalized();
  return dist;
}

}  // namespace bosim
