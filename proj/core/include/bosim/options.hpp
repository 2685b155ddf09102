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
#include <cstdint>

namespace bosim {

inline constexpr std::uint64_t kDefaultConfigurationGuard = 2'000'000;
inline constexpr std::uint64_t kDefaultEnsembleGuard = 1'000'000;

/// Size limits and the partition count shared by the heavy operations.
///
/// `threads` is a partition count, not a hint: results are identical for
/// any value, and it is never derived from the detected hardware.
struct ComputeOptions {
  std::uint64_t max_configurations = kDefaultConfigurationGuard;
  std::uint64_t max_branches = kDefaultEnsembleGuard;
  int threads = 1;
};

}  // namespace bosim
