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

#include "bosim/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "bosim/errors.hpp"
#include "parallel.hpp"

namespace bosim {

namespace {

void require_square_finite(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw InvalidArgument("permanent needs a square matrix, got " + std::to_string(a.rows()) +
                          "x" + std::to_string(a.cols()));
  }
  if (!a.allFinite()) throw InvalidArgument("permanent input has non-finite entries");
}

// Complex Kahan summation, compensated per component.
struct CompensatedSum {
  double re = 0.0, im = 0.0, re_c = 0.0, im_c = 0.0;

  static void add(double& sum, double& c, double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  void add(Complex x) {
    add(re, re_c, x.real());
    add(im, im_c, x.imag());
  }
  Complex value() const { return {re, im}; }
};

// Signed Ryser terms for Gray-code indices g in [begin, end), g >= 1.
CompensatedSum ryser_block(const Complex* data, int k, Eigen::Index ld, std::uint64_t begin,
                           std::uint64_t end) {
  CompensatedSum sum;
  if (begin >= end) return sum;
  std::vector<Complex> row_sums(static_cast<std::size_t>(k), Complex{});
  auto column = [&](int j) { return data + static_cast<std::ptrdiff_t>(j) * ld; };

  std::uint64_t gray = begin ^ (begin >> 1);
  for (int j = 0; j < k; ++j) {
    if ((gray >> j) & 1U) {
      const Complex* col = column(j);
      for (int i = 0; i < k; ++i) row_sums[static_cast<std::size_t>(i)] += col[i];
    }
  }
  auto term = [&] {
    Complex prod = row_sums[0];
    for (int i = 1; i < k; ++i) prod *= row_sums[static_cast<std::size_t>(i)];
    return (std::popcount(gray) & 1) ? -prod : prod;
  };
  sum.add(term());
  for (std::uint64_t g = begin + 1; g < end; ++g) {
    const int j = std::countr_zero(g);
    gray ^= std::uint64_t{1} << j;
    const Complex* col = column(j);
    if ((gray >> j) & 1U) {
      for (int i = 0; i < k; ++i) row_sums[static_cast<std::size_t>(i)] += col[i];
    } else {
      for (int i = 0; i < k; ++i) row_sums[static_cast<std::size_t>(i)] -= col[i];
    }
    sum.add(term());
  }
  return sum;
}

}  // namespace

Complex permanent_naive(const ComplexMatrix& a) {
  require_square_finite(a);
  const int k = static_cast<int>(a.rows());
  if (k > kNaivePermanentLimit) {
    throw GuardError("naive permanent dimension above oracle limit", static_cast<std::uint64_t>(k),
                     kNaivePermanentLimit);
  }
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total{0.0, 0.0};
  do {
    Complex prod{1.0, 0.0};
    for (int i = 0; i < k; ++i) prod *= a(i, sigma[static_cast<std::size_t>(i)]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

namespace detail {

Complex ryser_kernel(const Complex* data, int k, Eigen::Index ld, int partitions) {
  if (k == 0) return {1.0, 0.0};
  const std::uint64_t subsets = std::uint64_t{1} << k;
  const auto blocks = static_cast<std::size_t>(std::max(partitions, 1));
  std::vector<CompensatedSum> partial(blocks);
  // Index 0 is the empty subset, whose product is zero.
  parallel_blocks(subsets - 1, partitions, [&](std::size_t begin, std::size_t end, int worker) {
    partial[static_cast<std::size_t>(worker)] = ryser_block(data, k, ld, begin + 1, end + 1);
  });
  CompensatedSum total;
  for (const auto& p : partial) {
    total.add(p.value());
    total.add({-p.re_c, -p.im_c});
  }
  return (k & 1) ? -total.value() : total.value();
}

}  // namespace detail

Complex permanent_ryser(const ComplexMatrix& a, int partitions) {
  require_square_finite(a);
  const int k = static_cast<int>(a.rows());
  if (k > kRyserPermanentLimit) {
    throw GuardError("Ryser permanent dimension above guard", static_cast<std::uint64_t>(k),
                     kRyserPermanentLimit);
  }
  return detail::ryser_kernel(a.data(), k, a.outerStride(), partitions);
}

ComplexMatrix build_scattering_submatrix(const ComplexMatrix& u, const ModeOccupation& input,
                                         const ModeOccupation& output) {
  if (input.total() != output.total()) {
    throw InvalidArgument("photon number mismatch: input has " + std::to_string(input.total()) +
                          ", output has " + std::to_string(output.total()));
  }
  if (input.modes() != u.cols() || output.modes() != u.rows()) {
    throw InvalidArgument("occupation mode count does not match the unitary");
  }
  const int k = input.total();
  std::vector<int> rows, cols;
  rows.reserve(static_cast<std::size_t>(k));
  cols.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < output.modes(); ++i) rows.insert(rows.end(), static_cast<std::size_t>(output[i]), i);
  for (int j = 0; j < input.modes(); ++j) cols.insert(cols.end(), static_cast<std::size_t>(input[j]), j);
  ComplexMatrix out(k, k);
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < k; ++r) out(r, c) = u(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
  }
  return out;
}

}  // namespace bosim
