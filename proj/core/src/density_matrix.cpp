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

#include "cohpower/density_matrix.hpp"

#include <cmath>

#include "cohpower/constants.hpp"

namespace cohpower {

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  const Eigen::MatrixXcd& m = mat_.eigen();

  const double herm = detail::hermiticity_residual(m);
  if (herm > kHermitianTol) {
    throw InvariantViolation("hermiticity", herm, kHermitianTol);
  }

  const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_dev > kTraceTol) {
    throw InvariantViolation("unit trace", trace_dev, kTraceTol);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m,
                                                         Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    throw InvariantViolation("positive semidefiniteness", -min_eig, kPsdTol);
  }
}

DensityMatrix density_from_pure(const PureState& psi) {
  const Eigen::VectorXcd& a = psi.amps();
  const double norm_dev = std::abs(a.squaredNorm() - 1.0);
  if (norm_dev > kNormTol) {
    throw InvariantViolation("unit norm", norm_dev, kNormTol);
  }
  return DensityMatrix(ComplexMatrix(a * a.adjoint()));
}

DensityMatrix dephase(const DensityMatrix& rho) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  d.diagonal() = rho.eigen().diagonal();
  return DensityMatrix(ComplexMatrix(std::move(d)));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.eigen(),
                                                         Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (double lambda : solver.eigenvalues()) {
    if (lambda < kEigenvalueFloor) continue;  // clamp PSD slack to zero
    entropy -= lambda * std::log(lambda);
  }
  return entropy < 0.0 ? 0.0 : entropy;
}

}  // namespace cohpower
