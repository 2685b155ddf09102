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

#include <variant>
#include <vector>

#include "bosim/permanent.hpp"
#include "bosim/random.hpp"

namespace bosim {

inline constexpr double kUnitarityTolerance = 1e-10;

/// Two-mode beamsplitter acting on modes i and j (0-based) with block
/// [[cos t, -e^{i phi} sin t], [e^{-i phi} sin t, cos t]].
struct Beamsplitter {
  int i = 0;
  int j = 1;
  double theta = 0.0;
  double phi = 0.0;
};

/// Phase e^{i phi} on mode i.
struct PhaseShifter {
  int i = 0;
  double phi = 0.0;
};

using OpticalElement = std::variant<Beamsplitter, PhaseShifter>;

struct UnitarityCheck {
  bool passed = false;
  double max_deviation = 0.0;
};

/// max_{ij} |(U^dagger U - I)_{ij}| against `tol`.
UnitarityCheck validate_unitarity(const ComplexMatrix& u, double tol = kUnitarityTolerance);

/// An m x m interferometer transfer matrix, checked unitary on construction.
/// Entry (i, j) is the amplitude for a photon entering mode j to leave in
/// mode i.
class UnitaryMatrix {
 public:
  /// Throws InvalidArgument if `u` is not square or fails validate_unitarity.
  explicit UnitaryMatrix(ComplexMatrix u, double tol = kUnitarityTolerance);

  static UnitaryMatrix identity(int modes);

  int modes() const noexcept { return static_cast<int>(u_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return u_; }
  Complex operator()(int row, int col) const { return u_(row, col); }

 private:
  ComplexMatrix u_;
};

UnitaryMatrix element_unitary(const OpticalElement& e, int modes);

/// Product of element unitaries; the first element in the list acts first.
UnitaryMatrix compose(const std::vector<OpticalElement>& elements, int modes);

/// The circuit that undoes `elements`: reversed, with beamsplitter angles
/// negated and phase-shifter phases conjugated.
std::vector<OpticalElement> inverse_circuit(const std::vector<OpticalElement>& elements);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with each
/// column of Q rotated by the phase of the matching diagonal entry of R.
UnitaryMatrix haar_random(int modes, RandomSeed seed);

}  // namespace bosim
