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

#include "cohpower/state_params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cohpower/constants.hpp"

namespace cohpower {

StateParams::StateParams(Eigen::VectorXd t, Eigen::VectorXd p)
    : thetas(std::move(t)), phis(std::move(p)) {
  if (thetas.size() != phis.size()) {
    throw DimensionMismatch("state params need N-1 thetas and N-1 phis");
  }
  if (!thetas.allFinite() || !phis.allFinite()) {
    throw InvariantViolation("finite parameters", std::nan(""), 0.0);
  }
}

StateParams StateParams::basis(int dim, int k) {
  if (k < 0 || k >= dim) {
    throw DimensionMismatch("basis index out of range");
  }
  // Angles before k point the radius away from earlier coordinates; the
  // angle at k (when present) stops it there.
  Eigen::VectorXd thetas = Eigen::VectorXd::Zero(dim - 1);
  for (int j = 0; j < k && j < dim - 1; ++j) {
    thetas(j) = std::numbers::pi / 2.0;
  }
  return StateParams(std::move(thetas), Eigen::VectorXd::Zero(dim - 1));
}

StateParams StateParams::maximally_coherent(int dim) {
  Eigen::VectorXd thetas(dim - 1);
  for (int k = 0; k < dim - 1; ++k) {
    thetas(k) = std::acos(1.0 / std::sqrt(double(dim - k)));
  }
  return StateParams(std::move(thetas), Eigen::VectorXd::Zero(dim - 1));
}

StateParams StateParams::random(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> theta_dist(0.0, std::numbers::pi / 2.0);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * std::numbers::pi);
  Eigen::VectorXd thetas(dim - 1);
  Eigen::VectorXd phis(dim - 1);
  for (int k = 0; k < dim - 1; ++k) thetas(k) = theta_dist(rng);
  for (int k = 0; k < dim - 1; ++k) phis(k) = phi_dist(rng);
  return StateParams(std::move(thetas), std::move(phis));
}

PureState decode(const StateParams& params) {
  Eigen::VectorXcd amps(params.dim());
  detail::decode_amps(params.thetas, params.phis, amps);
  return PureState(std::move(amps));
}

StateParams encode(const PureState& psi) {
  const int n = psi.dim();
  Eigen::VectorXd thetas = Eigen::VectorXd::Zero(std::max(n - 1, 0));
  Eigen::VectorXd phis = Eigen::VectorXd::Zero(std::max(n - 1, 0));

  double tail = 1.0;  // running product of sines = norm of the remaining tail
  for (int k = 0; k < n - 1; ++k) {
    const double r = std::abs(psi.amp(k));
    if (tail <= kPhaseEps) {
      thetas(k) = 0.0;  // tail exhausted; remaining amplitudes are zero
      continue;
    }
    const double c = std::clamp(r / tail, 0.0, 1.0);
    thetas(k) = std::acos(c);
    tail *= std::sin(thetas(k));
  }
  for (int k = 1; k < n; ++k) {
    const Complex a = psi.amp(k);
    if (std::abs(a) > kPhaseEps) {
      double phi = std::arg(a);
      if (phi < 0.0) phi += 2.0 * std::numbers::pi;
      phis(k - 1) = phi;
    }
  }
  return StateParams(std::move(thetas), std::move(phis));
}

namespace detail {

void decode_amps(const Eigen::VectorXd& thetas, const Eigen::VectorXd& phis,
                 Eigen::VectorXcd& out) {
  const int n = static_cast<int>(thetas.size()) + 1;
  double prod = 1.0;
  for (int k = 0; k < n - 1; ++k) {
    const double r = prod * std::cos(thetas(k));
    out(k) = (k == 0) ? Complex(r, 0.0)
                      : Complex(r * std::cos(phis(k - 1)),
                                r * std::sin(phis(k - 1)));
    prod *= std::sin(thetas(k));
  }
  out(n - 1) = (n == 1) ? Complex(1.0, 0.0)
                        : Complex(prod * std::cos(phis(n - 2)),
                                  prod * std::sin(phis(n - 2)));
}

}  // namespace detail

}  // namespace cohpower
