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

#include "cohpower/measures.hpp"

#include <cmath>

#include "cohpower/constants.hpp"

namespace cohpower {

namespace {

// Shannon entropy of a probability-like vector with the 0 ln 0 = 0 convention
// and the same floor as von_neumann_entropy.
double shannon_entropy(const Eigen::VectorXd& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < kEigenvalueFloor) continue;
    h -= p(i) * std::log(p(i));
  }
  return h < 0.0 ? 0.0 : h;
}

}  // namespace

std::string to_string(CoherenceMeasure m) {
  return m == CoherenceMeasure::L1 ? "l1" : "relent";
}

double c_l1(const DensityMatrix& rho) {
  const Eigen::MatrixXcd& m = rho.eigen();
  double sum = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    for (int j = 0; j < rho.dim(); ++j) {
      if (i != j) sum += std::abs(m(i, j));
    }
  }
  return sum;
}

double c_rel_ent(const DensityMatrix& rho) {
  const double value = von_neumann_entropy(dephase(rho)) - von_neumann_entropy(rho);
  // The measure is provably non-negative; tiny negatives are fp artifacts.
  return (value < 0.0 && value > -kPsdTol) ? 0.0 : value;
}

double coherence(const DensityMatrix& rho, CoherenceMeasure m) {
  return m == CoherenceMeasure::L1 ? c_l1(rho) : c_rel_ent(rho);
}

double gain(const UnitaryOperator& u, const DensityMatrix& rho,
            CoherenceMeasure m) {
  if (u.dim() != rho.dim()) {
    throw DimensionMismatch("state and unitary differ in dimension");
  }
  return coherence(conjugate_by_unitary(rho, u), m) - coherence(rho, m);
}

double c_l1_pure(const Eigen::VectorXcd& amps) {
  double mod_sum = 0.0;
  double sq_sum = 0.0;
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    const double mod = std::abs(amps(i));
    mod_sum += mod;
    sq_sum += mod * mod;
  }
  return mod_sum * mod_sum - sq_sum;
}

double c_rel_ent_pure(const Eigen::VectorXcd& amps) {
  return shannon_entropy(amps.cwiseAbs2());
}

double coherence_pure(const Eigen::VectorXcd& amps, CoherenceMeasure m) {
  return m == CoherenceMeasure::L1 ? c_l1_pure(amps) : c_rel_ent_pure(amps);
}

double gain_pure(const UnitaryOperator& u, const PureState& psi,
                 CoherenceMeasure m) {
  if (u.dim() != psi.dim()) {
    throw DimensionMismatch("state and unitary differ in dimension");
  }
  Eigen::VectorXcd out(psi.dim());
  return detail::gain_from_amps(u.eigen(), psi.amps(), out, m);
}

namespace detail {

double gain_from_amps(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& in,
                      Eigen::VectorXcd& out, CoherenceMeasure m) {
  out.noalias() = u * in;
  return coherence_pure(out, m) - coherence_pure(in, m);
}

}  // namespace detail

}  // namespace cohpower
