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

#include "cohpower/complex_matrix.hpp"

#include <cmath>

namespace cohpower {

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw DimensionMismatch("complex matrix must be square and non-empty");
  }
  if (!entries_.allFinite()) {
    throw InvariantViolation("finite entries", std::nan(""), 0.0);
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  return ComplexMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

ComplexMatrix ComplexMatrix::zero(int dim) {
  return ComplexMatrix(Eigen::MatrixXcd::Zero(dim, dim));
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (dim() != other.dim()) {
    throw DimensionMismatch("matrices differ in dimension");
  }
  return (entries_ - other.entries_).cwiseAbs().maxCoeff();
}

namespace detail {

double hermiticity_residual(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_residual(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  return (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace detail

}  // namespace cohpower
