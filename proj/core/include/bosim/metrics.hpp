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

#include "bosim/distribution.hpp"

namespace bosim {

/// (1/2) sum_S |P_a(S) - P_b(S)| over the union of supports.
double total_variation_distance(const OutputDistribution& a, const OutputDistribution& b);

/// sum_S sqrt(P_a(S) P_b(S)).
double bhattacharyya_fidelity(const OutputDistribution& a, const OutputDistribution& b);

}  // namespace bosim
