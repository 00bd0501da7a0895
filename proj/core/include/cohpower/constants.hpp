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

#ifndef COHPOWER_CONSTANTS_HPP
#define COHPOWER_CONSTANTS_HPP

namespace cohpower {

// Library-wide validation tolerances. Chosen so that double-precision
// round trips of textbook matrices pass while genuinely invalid inputs fail.

/// Max-entry tolerance for Hermiticity checks, |A_ij - conj(A_ji)|.
inline constexpr double kHermitianTol = 1e-10;

/// Max-entry tolerance for the unitarity residual U^dag U - I.
inline constexpr double kUnitarityTol = 1e-10;

/// A matrix counts as positive semidefinite if its minimum eigenvalue
/// is >= -kPsdTol.
inline constexpr double kPsdTol = 1e-10;

/// Tolerance for |Tr rho - 1|.
inline constexpr double kTraceTol = 1e-10;

/// Tolerance for the unit-norm check of pure-state amplitude vectors.
inline constexpr double kNormTol = 1e-12;

/// Amplitudes with modulus below this are ignored by the global-phase
/// convention (the first amplitude above it is made real and non-negative).
inline constexpr double kPhaseEps = 1e-12;

/// Eigenvalues below this floor are treated as exactly zero in entropy
/// evaluations; values in [-kPsdTol, kEigenvalueFloor) are numerical noise.
inline constexpr double kEigenvalueFloor = 1e-12;

}  // namespace cohpower

#endif  // COHPOWER_CONSTANTS_HPP
