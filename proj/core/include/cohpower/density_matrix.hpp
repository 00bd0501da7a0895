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

#ifndef COHPOWER_DENSITY_MATRIX_HPP
#define COHPOWER_DENSITY_MATRIX_HPP

#include <Eigen/Dense>

#include "cohpower/complex_matrix.hpp"
#include "cohpower/pure_state.hpp"

namespace cohpower {

/// A validated density matrix rho: Hermitian within kHermitianTol, unit trace
/// within kTraceTol, and positive semidefinite down to -kPsdTol.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat);
  explicit DensityMatrix(Eigen::MatrixXcd mat)
      : DensityMatrix(ComplexMatrix(std::move(mat))) {}

  int dim() const { return mat_.dim(); }
  const ComplexMatrix& mat() const { return mat_; }
  const Eigen::MatrixXcd& eigen() const { return mat_.eigen(); }

 private:
  ComplexMatrix mat_;
};

/// The rank-1 projector |psi><psi|. Rejects inputs whose norm deviates from 1
/// by more than kNormTol (PureState construction already guarantees this; the
/// check here keeps the contract local).
DensityMatrix density_from_pure(const PureState& psi);

/// The diagonal part of rho: off-diagonal entries zeroed, trace preserved
/// exactly. Idempotent.
DensityMatrix dephase(const DensityMatrix& rho);

/// Von Neumann entropy -sum_k lambda_k ln lambda_k in nats, with 0 ln 0 = 0.
/// Eigenvalues below kEigenvalueFloor are treated as exactly zero; the result
/// lies in [0, ln N].
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace cohpower

#endif  // COHPOWER_DENSITY_MATRIX_HPP
