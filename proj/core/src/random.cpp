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

#include "bosim/random.hpp"

#include <cmath>
#include <numbers>

namespace bosim {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64_mix(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(RandomSeed seed, std::uint64_t substream) {
  std::uint64_t k = splitmix64_mix(seed.seed + kGamma);
  k = splitmix64_mix(k ^ splitmix64_mix(seed.stream + 2 * kGamma));
  key_ = splitmix64_mix(k ^ splitmix64_mix(substream + 3 * kGamma));
}

std::uint64_t CounterRng::next() {
  ++counter_;
  return splitmix64_mix(key_ + counter_ * kGamma);
}

double CounterRng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::complex<double> CounterRng::complex_normal() {
  // 1 - u keeps the logarithm argument in (0, 1].
  const double radius = std::sqrt(-std::log(1.0 - uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace bosim
