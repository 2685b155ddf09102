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

#include "bosim/noise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bosim/errors.hpp"

namespace bosim {

namespace {

constexpr double kSumTolerance = 1e-12;
constexpr double kTransitCrossCheckTolerance = 1e-10;

void check_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InvalidArgument(std::string("noise parameter ") + name + " must lie in [0, 1], got " +
                          std::to_string(value));
  }
}

struct ModeOption {
  int photons;
  bool orthogonal;
  double weight;
};

std::vector<ModeOption> mode_options(const NoiseModel& noise, int mode) {
  const double p = noise.ideal_probability(mode);
  std::vector<ModeOption> options;
  options.push_back({1, false, p});
  if (noise.channel == ErrorChannel::kNumber) {
    options.push_back({0, false, (1.0 - p) * noise.p0});
    options.push_back({2, false, (1.0 - p) * noise.p2});
  } else {
    options.push_back({1, true, 1.0 - p});
  }
  std::erase_if(options, [](const ModeOption& o) { return o.weight == 0.0; });
  return options;
}

}  // namespace

double NoiseModel::ideal_probability(int mode) const {
  if (!per_mode_p.empty()) return per_mode_p.at(static_cast<std::size_t>(mode));
  return p;
}

void NoiseModel::validate(int photons) const {
  check_probability(p, "p");
  check_probability(p0, "p0");
  check_probability(p2, "p2");
  check_probability(eta, "eta");
  if (std::abs(p0 + p2 - 1.0) > kSumTolerance) {
    throw InvalidArgument("noise parameters p0 + p2 must equal 1, got " + std::to_string(p0 + p2));
  }
  if (!per_mode_p.empty()) {
    if (per_mode_p.size() < static_cast<std::size_t>(photons)) {
      throw InvalidArgument("per-mode p list has " + std::to_string(per_mode_p.size()) +
                            " entries for " + std::to_string(photons) + " photons");
    }
    for (double v : per_mode_p) check_probability(v, "per_mode_p");
  }
}

std::vector<InputBranch> expand_input_ensemble(const ExperimentShape& shape,
                                               const NoiseModel& noise,
                                               std::uint64_t max_branches) {
  const int n = shape.photons;
  const int m = shape.modes;
  if (n < 0 || m < 1 || n > m) throw InvalidArgument("input ensemble needs 0 <= n <= m");
  noise.validate(n);

  std::vector<std::vector<ModeOption>> options;
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    options.push_back(mode_options(noise, i));
    count *= options.back().size();
    if (count > max_branches) {
      throw GuardError("input ensemble of " + std::to_string(n) + " modes exceeds the branch guard",
                       count, max_branches);
    }
  }

  std::vector<InputBranch> branches;
  branches.reserve(count);
  std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
  for (std::uint64_t b = 0; b < count; ++b) {
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    InputBranch branch;
    double weight = 1.0;
    bool ideal = true;
    for (int i = 0; i < n; ++i) {
      const auto& opt = options[static_cast<std::size_t>(i)][digit[static_cast<std::size_t>(i)]];
      counts[static_cast<std::size_t>(i)] = opt.photons;
      weight *= opt.weight;
      if (opt.orthogonal) branch.distinguishable_photons.push_back({i, 0});
      ideal = ideal && opt.photons == 1 && !opt.orthogonal;
    }
    branch.occupation = ModeOccupation(std::move(counts));
    branch.weight = weight;
    branch.ideal = ideal;
    branches.push_back(std::move(branch));
    for (int i = n - 1; i >= 0; --i) {
      auto& d = digit[static_cast<std::size_t>(i)];
      if (++d < options[static_cast<std::size_t>(i)].size()) break;
      d = 0;
    }
  }
  return branches;
}

double ideal_component_probability(const NoiseModel& noise, int photons) {
  double weight = 1.0;
  for (int i = 0; i < photons; ++i) weight *= noise.ideal_probability(i);
  return weight;
}

OutputDistribution add_classical_photon(const OutputDistribution& dist, const UnitaryMatrix& u,
                                        int input_mode, const ComputeOptions& options) {
  const int m = u.modes();
  if (dist.modes() != m) throw InvalidArgument("distribution mode count does not match the unitary");
  if (input_mode < 0 || input_mode >= m) throw InvalidArgument("input mode out of range");
  std::vector<double> transit(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) transit[static_cast<std::size_t>(i)] = std::norm(u(i, input_mode));

  OutputDistribution out(m);
  for (int total : dist.totals()) {
    auto source = dist.block(total);
    auto target = out.mutable_block(total + 1, options.max_configurations);
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    counts[0] = total;
    for (double p : source) {
      if (p != 0.0) {
        for (int i = 0; i < m; ++i) {
          auto& c = counts[static_cast<std::size_t>(i)];
          ++c;
          target[configuration_rank(counts)] += p * transit[static_cast<std::size_t>(i)];
          --c;
        }
      }
      next_configuration(counts);
    }
  }
  return out;
}

OutputDistribution distinguishable_distribution(const UnitaryMatrix& u, const ModeOccupation& input,
                                                const ComputeOptions& options) {
  const int m = u.modes();
  if (input.modes() != m) throw InvalidArgument("input occupation mode count does not match the unitary");
  const int k = input.total();
  if (k > kRyserPermanentLimit) {
    throw GuardError("photon number above the permanent guard", static_cast<std::uint64_t>(k),
                     kRyserPermanentLimit);
  }

  // Permanent route on the matrix of transition probabilities.
  const ComplexMatrix transition = u.matrix().cwiseAbs2().cast<Complex>();
  OutputDistribution dist(m);
  auto probs = dist.mutable_block(k, options.max_configurations);
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  counts[0] = k;
  for (auto& p : probs) {
    ModeOccupation out(counts);
    auto sub = build_scattering_submatrix(transition, input, out);
    p = permanent_ryser(sub).real() / static_cast<double>(occupancy_factorial_product(out));
    next_configuration(counts);
  }

  // Independent route: one classical transit per photon.
  auto transits = OutputDistribution::point_mass(ModeOccupation::vacuum(m));
  for (int j = 0; j < m; ++j) {
    for (int r = 0; r < input[j]; ++r) transits = add_classical_photon(transits, u, j, options);
  }
  auto check = transits.block(k);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (std::abs(check[i] - probs[i]) > kTransitCrossCheckTolerance) {
      throw ConsistencyError("distinguishable distribution: permanent and transit routes disagree");
    }
  }
  dist.check_normalized();
  return dist;
}

OutputDistribution branch_distribution(const UnitaryMatrix& u, const InputBranch& branch,
                                       const ComputeOptions& options) {
  std::vector<int> counts(branch.occupation.counts().begin(), branch.occupation.counts().end());
  for (const auto& label : branch.distinguishable_photons) {
    auto& c = counts.at(static_cast<std::size_t>(label.mode));
    if (c == 0) throw InvalidArgument("distinguishable photon label on an empty mode");
    --c;
  }
  auto dist = output_distribution(u, ModeOccupation(std::move(counts)), options);
  for (const auto& label : branch.distinguishable_photons) {
    dist = add_classical_photon(dist, u, label.mode, options);
  }
  return dist;
}

OutputDistribution partial_distinguishability_distribution(const UnitaryMatrix& u,
                                                           const ExperimentShape& shape, double p,
                                                           const ComputeOptions& options) {
  if (shape.modes != u.modes()) throw InvalidArgument("shape mode count does not match the unitary");
  NoiseModel noise;
  noise.p = p;
  noise.channel = ErrorChannel::kDistinguishability;
  const auto branches = expand_input_ensemble(shape, noise, options.max_branches);
  OutputDistribution mixture(u.modes());
  for (const auto& branch : branches) {
    mixture.accumulate(branch_distribution(u, branch, options), branch.weight,
                       options.max_configurations);
  }
  return mixture;
}

OutputDistribution apply_loss(const OutputDistribution& dist, double eta,
                              const ComputeOptions& options) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidArgument("loss eta must lie in [0, 1]");
  if (eta == 1.0) return dist;
  const int m = dist.modes();
  const auto totals = dist.totals();
  if (totals.empty()) return OutputDistribution(m);
  const int max_total = totals.back();

  // pmf[s][r] = C(s, r) eta^r (1 - eta)^(s - r)
  std::vector<std::vector<double>> pmf(static_cast<std::size_t>(max_total + 1));
  for (int s = 0; s <= max_total; ++s) {
    auto& row = pmf[static_cast<std::size_t>(s)];
    row.resize(static_cast<std::size_t>(s + 1));
    double binom = 1.0;
    for (int r = 0; r <= s; ++r) {
      row[static_cast<std::size_t>(r)] = binom * std::pow(eta, r) * std::pow(1.0 - eta, s - r);
      binom = binom * (s - r) / (r + 1);
    }
  }
  OutputDistribution out(m);
  for (int t = 0; t <= max_total; ++t) out.mutable_block(t, options.max_configurations);

  std::vector<int> kept(static_cast<std::size_t>(m));
  dist.for_each([&](std::span<const int> s, double p) {
    if (p == 0.0) return;
    std::fill(kept.begin(), kept.end(), 0);
    // Odometer over every sub-occupation 0 <= kept <= s.
    while (true) {
      double w = p;
      int survivors = 0;
      for (int i = 0; i < m; ++i) {
        const auto si = static_cast<std::size_t>(i);
        w *= pmf[static_cast<std::size_t>(s[si])][static_cast<std::size_t>(kept[si])];
        survivors += kept[si];
      }
      if (w != 0.0) {
        out.mutable_block(survivors)[configuration_rank(kept)] += w;
      }
      int i = 0;
      for (; i < m; ++i) {
        const auto si = static_cast<std::size_t>(i);
        if (kept[si] < s[si]) {
          ++kept[si];
          break;
        }
        kept[si] = 0;
      }
      if (i == m) break;
    }
  });
  return out;
}

}  // namespace bosim
