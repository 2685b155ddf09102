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

#include <complex>
#include <cstdint>
#include <limits>

namespace bosim {

/// Seed plus stream id. Distinct streams of one seed are independent.
struct RandomSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Counter-based 64-bit generator.
///
/// The key is derived from (seed, stream, substream) with the SplitMix64
/// finalizer, and the k-th output is finalizer(key + k * 0x9e3779b97f4a7c15).
/// Output depends only on those four integers, so any trial can be replayed
/// on any platform without running its predecessors. Satisfies
/// UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(RandomSeed seed, std::uint64_t substream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return next(); }
  result_type next();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Standard complex normal (independent real and imaginary parts with
  /// variance 1/2 each), via Box-Muller.
  std::complex<double> complex_normal();

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t x) noexcept;

}  // namespace bosim
