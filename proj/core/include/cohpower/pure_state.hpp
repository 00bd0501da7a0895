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

#ifndef COHPOWER_PURE_STATE_HPP
#define COHPOWER_PURE_STATE_HPP

#include <Eigen/Dense>

#include "cohpower/complex_matrix.hpp"

namespace cohpower {

/// A unit-norm complex amplitude vector with a fixed global-phase convention:
/// the first amplitude with modulus above kPhaseEps is real and non-negative.
///
/// The constructor rejects vectors whose norm deviates from 1 by more than
/// kNormTol and then applies the phase convention (a pure rotation, so no
/// physical information is lost). This makes state equality testable.
class PureState {
 public:
  explicit PureState(Eigen::VectorXcd amps);

  /// |k> in an N-dimensional space (0-based index).
  static PureState basis_state(int dim, int k);

  /// The state with all amplitudes equal to 1/sqrt(N).
  static PureState maximally_coherent(int dim);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Eigen::VectorXcd& amps() const { return amps_; }
  Complex amp(int k) const { return amps_(k); }

 private:
  Eigen::VectorXcd amps_;
};

}  // namespace cohpower

#endif  // COHPOWER_PURE_STATE_HPP
