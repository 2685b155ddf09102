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

#include <Eigen/Dense>

#include "bosim/fock.hpp"

namespace bosim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr int kNaivePermanentLimit = 9;
inline constexpr int kRyserPermanentLimit = 30;

/// Sum over all permutations of prod_i a(i, sigma(i)). O(k! k); used as the
/// reference oracle, limited to k <= 9. Per of the 0x0 matrix is 1.
Complex permanent_naive(const ComplexMatrix& a);

/// Ryser's inclusion-exclusion formula
///
///   Per(A) = (-1)^k sum_{S subset [k]} (-1)^|S| prod_i sum_{j in S} a(i, j)
///
/// iterated in Gray-code order so each step adds or removes one column from
/// the running row sums: O(2^k k) operations. The outer sum is Kahan
/// compensated.
///
/// The subset range may be split into `partitions` contiguous blocks that
/// are evaluated concurrently and combined in block order; the result is
/// bit-for-bit reproducible for a fixed partition count.
Complex permanent_ryser(const ComplexMatrix& a, int partitions = 1);

/// The k x k matrix whose permanent gives the transition amplitude from
/// `input` to `output`: column j of `u` repeated input[j] times, row i
/// repeated output[i] times.
ComplexMatrix build_scattering_submatrix(const ComplexMatrix& u, const ModeOccupation& input,
                                         const ModeOccupation& output);

namespace detail {
// Ryser over a column-major k x k buffer with leading dimension `ld`.
Complex ryser_kernel(const Complex* data, int k, Eigen::Index ld, int partitions);
}  // namespace detail

}  // namespace bosim
