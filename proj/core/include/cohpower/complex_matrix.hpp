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

#ifndef COHPOWER_COMPLEX_MATRIX_HPP
#define COHPOWER_COMPLEX_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

#include "cohpower/errors.hpp"

namespace cohpower {

using Complex = std::complex<double>;

/// A validated dense N x N complex matrix, the substrate for states and
/// operators. Construction rejects non-square shapes and non-finite entries;
/// instances are immutable values afterwards.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(Eigen::MatrixXcd entries);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& eigen() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  /// Largest entry modulus of (*this - other); throws on dimension mismatch.
  double max_abs_diff(const ComplexMatrix& other) const;

 private:
  Eigen::MatrixXcd entries_;
};

namespace detail {

/// max_ij |A_ij - conj(A_ji)|.
double hermiticity_residual(const Eigen::MatrixXcd& m);

/// max-entry modulus of A^dag A - I.
double unitarity_residual(const Eigen::MatrixXcd& m);

}  // namespace detail

}  // namespace cohpower

#endif  // COHPOWER_COMPLEX_MATRIX_HPP
