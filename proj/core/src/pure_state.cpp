// Copyright 2026 The cohpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohpower/pure_state.hpp"

#include <cmath>

#include "cohpower/constants.hpp"

namespace cohpower {

PureState::PureState(Eigen::VectorXcd amps) : amps_(std::move(amps)) {
  if (amps_.size() < 1) {
    throw DimensionMismatch("pure state needs at least one amplitude");
  }
  if (!amps_.allFinite()) {
    throw InvariantViolation("finite amplitudes", std::nan(""), 0.0);
  }
  const double norm_dev = std::abs(amps_.squaredNorm() - 1.0);
  if (norm_dev > kNormTol) {
    throw InvariantViolation("unit norm", norm_dev, kNormTol);
  }
  // Canonical global phase: rotate so the first significant amplitude is
  // real and non-negative.
  for (Eigen::Index k = 0; k < amps_.size(); ++k) {
    const double mod = std::abs(amps_(k));
    if (mod > kPhaseEps) {
      const Complex phase = std::conj(amps_(k)) / mod;
      // For k itself the product mod*phase*amps_(k)/... lands exactly on the
      // real axis; applying the same rotation everywhere keeps the state.
      if (phase != Complex(1.0, 0.0)) {
        amps_ *= phase;
      }
      break;
    }
  }
}

PureState PureState::basis_state(int dim, int k) {
  if (k < 0 || k >= dim) {
    throw DimensionMismatch("basis index out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps(k) = Complex(1.0, 0.0);
  return PureState(std::move(amps));
}

PureState PureState::maximally_coherent(int dim) {
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Constant(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
  return PureState(std::move(amps));
}

}  // namespace cohpower
