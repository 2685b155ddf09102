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

#include "bosim/interferometer.hpp"

#include <cmath>
#include <string>

#include "bosim/errors.hpp"

namespace bosim {

namespace {

void check_mode(int mode, int modes) {
  if (mode < 0 || mode >= modes) {
    throw InvalidArgument("optical element mode index " + std::to_string(mode) +
                          " out of range for " + std::to_string(modes) + " modes");
  }
}

}  // namespace

UnitarityCheck validate_unitarity(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) throw InvalidArgument("unitarity check needs a square matrix");
  const ComplexMatrix gram = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  const double deviation = gram.size() == 0 ? 0.0 : gram.cwiseAbs().maxCoeff();
  return {deviation <= tol, deviation};
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix u, double tol) : u_(std::move(u)) {
  if (u_.rows() < 1 || u_.rows() != u_.cols()) {
    throw InvalidArgument("unitary must be a non-empty square matrix");
  }
  if (!u_.allFinite()) throw InvalidArgument("unitary has non-finite entries");
  auto check = validate_unitarity(u_, tol);
  if (!check.passed) {
    throw InvalidArgument("matrix is not unitary (max |U^dagger U - I| = " +
                          std::to_string(check.max_deviation) + ")");
  }
}

UnitaryMatrix UnitaryMatrix::identity(int modes) {
  return UnitaryMatrix(ComplexMatrix::Identity(modes, modes));
}

UnitaryMatrix element_unitary(const OpticalElement& e, int modes) {
  if (modes < 1) throw InvalidArgument("mode count must be positive");
  ComplexMatrix u = ComplexMatrix::Identity(modes, modes);
  if (const auto* bs = std::get_if<Beamsplitter>(&e)) {
    check_mode(bs->i, modes);
    check_mode(bs->j, modes);
    if (bs->i == bs->j) throw InvalidArgument("beamsplitter needs two distinct modes");
    const double c = std::cos(bs->theta);
    const double s = std::sin(bs->theta);
    const Complex phase = std::polar(1.0, bs->phi);
    u(bs->i, bs->i) = c;
    u(bs->i, bs->j) = -phase * s;
    u(bs->j, bs->i) = std::conj(phase) * s;
    u(bs->j, bs->j) = c;
  } else {
    const auto& ps = std::get<PhaseShifter>(e);
    check_mode(ps.i, modes);
    u(ps.i, ps.i) = std::polar(1.0, ps.phi);
  }
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix compose(const std::vector<OpticalElement>& elements, int modes) {
  ComplexMatrix u = ComplexMatrix::Identity(modes, modes);
  for (const auto& e : elements) u = element_unitary(e, modes).matrix() * u;
  return UnitaryMatrix(std::move(u));
}

std::vector<OpticalElement> inverse_circuit(const std::vector<OpticalElement>& elements) {
  std::vector<OpticalElement> out;
  out.reserve(elements.size());
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
    if (const auto* bs = std::get_if<Beamsplitter>(&*it)) {
      out.emplace_back(Beamsplitter{bs->i, bs->j, -bs->theta, bs->phi});
    } else {
      const auto& ps = std::get<PhaseShifter>(*it);
      out.emplace_back(PhaseShifter{ps.i, -ps.phi});
    }
  }
  return out;
}

UnitaryMatrix haar_random(int modes, RandomSeed seed) {
  if (modes < 1) throw InvalidArgument("Haar unitary needs at least one mode");
  CounterRng rng(seed);
  ComplexMatrix z(modes, modes);
  for (int c = 0; c < modes; ++c) {
    for (int r = 0; r < modes; ++r) z(r, c) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(modes, modes);
  const auto& r = qr.matrixQR();
  for (int j = 0; j < modes; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return UnitaryMatrix(std::move(q));
}

}  // namespace bosim
