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

#ifndef COHPOWER_OPTIMIZER_HPP
#define COHPOWER_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "cohpower/state_params.hpp"

namespace cohpower {

/// Knobs of the multistart local search.
struct OptimizerConfig {
  int restarts = 64;
  int max_iters = 2000;
  double param_tol = 1e-9;   // simplex diameter termination
  double value_tol = 1e-10;  // objective spread termination
  std::uint64_t seed = 0;

  void validate() const;
};

/// Knobs of the generator-power limit computation.
struct GeneratorConfig {
  OptimizerConfig inner{};
  /// Strictly decreasing positive time steps for the difference quotients.
  std::vector<double> dt_ladder{1e-2, 5e-3, 2.5e-3, 1.25e-3};
  double limit_tol = 1e-3;

  void validate() const;
};

struct LocalSearchResult {
  StateParams params;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free simplex ascent (Nelder-Mead on -objective). The objective
/// must be total and finite; it may be non-smooth, which is why no gradients
/// are used. Terminates when the simplex diameter drops below param_tol, the
/// objective spread drops below value_tol, or max_iters is reached (reported
/// in the result, not an error). The returned value is the objective
/// evaluated at the returned params, never below the value at `start`, and
/// the whole search is deterministic given (start, cfg).
LocalSearchResult local_maximize(
    const std::function<double(const StateParams&)>& objective,
    const StateParams& start, const OptimizerConfig& cfg);

}  // namespace cohpower

#endif  // COHPOWER_OPTIMIZER_HPP
