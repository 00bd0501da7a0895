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

#include "cohpower/operators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "cohpower/constants.hpp"

namespace cohpower {

UnitaryOperator::UnitaryOperator(ComplexMatrix mat) : mat_(std::move(mat)) {
  const double residual = detail::unitarity_residual(mat_.eigen());
  if (residual > kUnitarityTol) {
    throw InvariantViolation("unitarity", residual, kUnitarityTol);
  }
}

HamiltonianOperator::HamiltonianOperator(ComplexMatrix mat)
    : mat_(std::move(mat)) {
  const double residual = detail::hermiticity_residual(mat_.eigen());
  if (residual > kHermitianTol) {
    throw InvariantViolation("hermiticity", residual, kHermitianTol);
  }
}

UnitaryOperator identity_unitary(int dim) {
  return UnitaryOperator(ComplexMatrix::identity(dim));
}

UnitaryOperator rotation_x(double theta) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  m(1, 1) = c;
  m(1, 2) = -s;
  m(2, 1) = s;
  m(2, 2) = c;
  return UnitaryOperator(ComplexMatrix(std::move(m)));
}

UnitaryOperator fourier_unitary(int dim) {
  if (dim < 1) {
    throw DimensionMismatch("fourier_unitary requires dim >= 1");
  }
  Eigen::MatrixXcd m(dim, dim);
  const double scale = 1.0 / std::sqrt(double(dim));
  for (int a = 0; a < dim; ++a) {
    for (int j = 0; j < dim; ++j) {
      const double arg =
          2.0 * std::numbers::pi * double((a * j) % dim) / double(dim);
      m(a, j) = scale * Complex(std::cos(arg), std::sin(arg));
    }
  }
  return UnitaryOperator(ComplexMatrix(std::move(m)));
}

UnitaryOperator haar_random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw DimensionMismatch("haar_random_unitary requires dim >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::MatrixXcd ginibre(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      ginibre(i, j) = Complex(re, im) / std::numbers::sqrt2;
    }
  }

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::VectorXcd r_diag = qr.matrixQR().diagonal();
  // Fix the phase ambiguity of QR; without this the distribution is biased.
  for (int j = 0; j < dim; ++j) {
    q.col(j) *= r_diag(j) / std::abs(r_diag(j));
  }
  return UnitaryOperator(ComplexMatrix(std::move(q)));
}

UnitaryOperator evolution_unitary(const HamiltonianOperator& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.eigen());
  const Eigen::VectorXd& energies = solver.eigenvalues();
  Eigen::VectorXcd phases(h.dim());
  for (int k = 0; k < h.dim(); ++k) {
    const double arg = -energies(k) * t;
    phases(k) = Complex(std::cos(arg), std::sin(arg));
  }
  Eigen::MatrixXcd u = solver.eigenvectors() * phases.asDiagonal() *
                       solver.eigenvectors().adjoint();
  return UnitaryOperator(ComplexMatrix(std::move(u)));
}

DensityMatrix conjugate_by_unitary(const DensityMatrix& rho,
                                   const UnitaryOperator& u) {
  if (rho.dim() != u.dim()) {
    throw DimensionMismatch("state and unitary differ in dimension");
  }
  Eigen::MatrixXcd out = u.eigen() * rho.eigen() * u.eigen().adjoint();
  // Conjugation preserves Hermiticity exactly in exact arithmetic; symmetrize
  // away the floating-point residue so validation stays meaningful.
  out = ((out + out.adjoint()) / 2.0).eval();
  return DensityMatrix(ComplexMatrix(std::move(out)));
}

PureState apply_unitary(const UnitaryOperator& u, const PureState& psi) {
  if (psi.dim() != u.dim()) {
    throw DimensionMismatch("state and unitary differ in dimension");
  }
  return PureState(u.eigen() * psi.amps());
}

}  // namespace cohpower
