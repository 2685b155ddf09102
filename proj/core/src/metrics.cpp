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

#include "bosim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bosim/errors.hpp"

namespace bosim {

namespace {

// Calls f(pa, pb) for every configuration in the union of both supports.
template <class F>
void zip_blocks(const OutputDistribution& a, const OutputDistribution& b, F&& f) {
  if (a.modes() != b.modes()) throw InvalidArgument("distributions have different mode counts");
  std::set<int> totals;
  for (int t : a.totals()) totals.insert(t);
  for (int t : b.totals()) totals.insert(t);
  for (int t : totals) {
    auto pa = a.block(t);
    auto pb = b.block(t);
    const std::size_t n = std::max(pa.size(), pb.size());
    for (std::size_t i = 0; i < n; ++i) f(pa.empty() ? 0.0 : pa[i], pb.empty() ? 0.0 : pb[i]);
  }
}

}  // namespace

double total_variation_distance(const OutputDistribution& a, const OutputDistribution& b) {
  double sum = 0.0;
  zip_blocks(a, b, [&](double pa, double pb) { sum += std::abs(pa - pb); });
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

double bhattacharyya_fidelity(const OutputDistribution& a, const OutputDistribution& b) {
  double sum = 0.0;
  zip_blocks(a, b, [&](double pa, double pb) { sum += std::sqrt(std::max(pa, 0.0) * std::max(pb, 0.0)); });
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace bosim
