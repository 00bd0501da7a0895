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

#ifndef COHPOWER_STATE_PARAMS_HPP
#define COHPOWER_STATE_PARAMS_HPP

#include <random>

#include "cohpower/pure_state.hpp"

namespace cohpower {

/// Hyperspherical coordinates on the pure-state manifold of dimension N:
/// N-1 angles (nominally in [0, pi/2]) fixing the amplitude moduli
///
///   r_0 = cos t_0,  r_k = sin t_0 ... sin t_{k-1} cos t_k,
///   r_{N-1} = sin t_0 ... sin t_{N-2},
///
/// and N-1 relative phases (nominally in [0, 2 pi)) attached to amplitudes
/// 1..N-1; the first amplitude carries no phase, which fixes the global
/// phase. The 2N-2 real parameters match the physical degrees of freedom,
/// and decoding yields a unit-norm state for *any* real angles, so search
/// algorithms may roam without a projection step.
struct StateParams {
  Eigen::VectorXd thetas;  // size N-1
  Eigen::VectorXd phis;    // size N-1

  StateParams(Eigen::VectorXd t, Eigen::VectorXd p);

  int dim() const { return static_cast<int>(thetas.size()) + 1; }

  /// Params decoding to the basis state |k>.
  static StateParams basis(int dim, int k);

  /// Params decoding to the maximally coherent state.
  static StateParams maximally_coherent(int dim);

  /// Uniform draw: thetas in [0, pi/2], phis in [0, 2 pi).
  static StateParams random(int dim, std::mt19937_64& rng);
};

/// Decodes params into a canonical PureState. Total on all real inputs; unit
/// norm holds by construction to ~1e-14.
PureState decode(const StateParams& params);

/// Inverts the parameterization for a canonical state; decode(encode(psi))
/// reproduces psi's amplitudes to ~1e-12.
StateParams encode(const PureState& psi);

namespace detail {

/// decode without canonicalization or allocation; `out` must have size N.
/// The skipped phase canonicalization is a global rotation, which no
/// coherence measure sees.
void decode_amps(const Eigen::VectorXd& thetas, const Eigen::VectorXd& phis,
                 Eigen::VectorXcd& out);

}  // namespace detail

}  // namespace cohpower

#endif  // COHPOWER_STATE_PARAMS_HPP
