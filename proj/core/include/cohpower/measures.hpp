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

#ifndef COHPOWER_MEASURES_HPP
#define COHPOWER_MEASURES_HPP

#include <string>

#include "cohpower/density_matrix.hpp"
#include "cohpower/operators.hpp"

namespace cohpower {

/// Which coherence quantifier produced a value. Every power or gain result
/// records one of these.
enum class CoherenceMeasure { L1, RelEnt };

std::string to_string(CoherenceMeasure m);

/// l1-coherence: the sum of the moduli of all off-diagonal entries of rho.
/// Zero exactly on diagonal states; at most N-1.
double c_l1(const DensityMatrix& rho);

/// Relative entropy of coherence, S(dephase(rho)) - S(rho), in nats.
/// Non-negative (values in (-1e-10, 0) arising from floating point are
/// reported as 0); at most ln N.
double c_rel_ent(const DensityMatrix& rho);

/// Dispatch on the measure id.
double coherence(const DensityMatrix& rho, CoherenceMeasure m);

/// Coherence gain of u on the input rho: C(u rho u^dag) - C(rho).
/// May be negative; |gain| <= N-1 for L1 and <= ln N for RelEnt.
double gain(const UnitaryOperator& u, const DensityMatrix& rho,
            CoherenceMeasure m);

// Closed-form evaluations on pure states. For |psi><psi| the l1-coherence is
// (sum_i |a_i|)^2 - sum_i |a_i|^2 and the relative entropy of coherence is the
// Shannon entropy of (|a_i|^2), since S of a pure state vanishes. These agree
// with the density-matrix route to floating-point accuracy and are the hot
// path of the optimizers.

double c_l1_pure(const Eigen::VectorXcd& amps);
double c_rel_ent_pure(const Eigen::VectorXcd& amps);
double coherence_pure(const Eigen::VectorXcd& amps, CoherenceMeasure m);

/// gain(u, |psi><psi|, m) evaluated through the pure-state fast path.
double gain_pure(const UnitaryOperator& u, const PureState& psi,
                 CoherenceMeasure m);

namespace detail {

/// Gain for the (not necessarily canonical) amplitude vector `in`; `out` is
/// caller-provided scratch of the same size. No allocation, no validation.
double gain_from_amps(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& in,
                      Eigen::VectorXcd& out, CoherenceMeasure m);

}  // namespace detail

}  // namespace cohpower

#endif  // COHPOWER_MEASURES_HPP
