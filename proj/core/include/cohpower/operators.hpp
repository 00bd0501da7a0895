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

#ifndef COHPOWER_OPERATORS_HPP
#define COHPOWER_OPERATORS_HPP

#include <cstdint>

#include "cohpower/complex_matrix.hpp"
#include "cohpower/density_matrix.hpp"

namespace cohpower {

/// A validated N x N unitary: the max-entry deviation of U^dag U from the
/// identity is at most kUnitarityTol.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(ComplexMatrix mat);
  explicit UnitaryOperator(Eigen::MatrixXcd mat)
      : UnitaryOperator(ComplexMatrix(std::move(mat))) {}

  int dim() const { return mat_.dim(); }
  const ComplexMatrix& mat() const { return mat_; }
  const Eigen::MatrixXcd& eigen() const { return mat_.eigen(); }

 private:
  ComplexMatrix mat_;
};

/// A validated Hermitian operator (max |H_ij - conj(H_ji)| <= kHermitianTol).
class HamiltonianOperator {
 public:
  explicit HamiltonianOperator(ComplexMatrix mat);
  explicit HamiltonianOperator(Eigen::MatrixXcd mat)
      : HamiltonianOperator(ComplexMatrix(std::move(mat))) {}

  int dim() const { return mat_.dim(); }
  const ComplexMatrix& mat() const { return mat_; }
  const Eigen::MatrixXcd& eigen() const { return mat_.eigen(); }

 private:
  ComplexMatrix mat_;
};

/// The N x N identity as a unitary.
UnitaryOperator identity_unitary(int dim);

/// The 3-dimensional rotation by theta around the x axis: identity in the
/// first row/column, the 2x2 block [[cos, -sin], [sin, cos]] on indices {2,3}.
UnitaryOperator rotation_x(double theta);

/// The discrete Fourier matrix F_aj = exp(2*pi*i*a*j/N) / sqrt(N).
UnitaryOperator fourier_unitary(int dim);

/// A Haar-distributed random unitary, deterministic for a fixed seed.
/// Construction: QR decomposition of a complex Ginibre matrix with the
/// R-diagonal phase correction, which samples exactly from the Haar measure.
UnitaryOperator haar_random_unitary(int dim, std::uint64_t seed);

/// exp(-i H t), computed by eigendecomposition of the Hermitian H so the
/// result is unitary up to eigensolver accuracy.
UnitaryOperator evolution_unitary(const HamiltonianOperator& h, double t);

/// U rho U^dag. Preserves the eigenvalue multiset and the trace.
DensityMatrix conjugate_by_unitary(const DensityMatrix& rho,
                                   const UnitaryOperator& u);

/// Applies U to the amplitudes of a pure state.
PureState apply_unitary(const UnitaryOperator& u, const PureState& psi);

}  // namespace cohpower

#endif  // COHPOWER_OPERATORS_HPP
