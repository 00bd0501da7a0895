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

#ifndef COHPOWER_RANDOM_HPP
#define COHPOWER_RANDOM_HPP

#include <cstdint>
#include <random>

#include "cohpower/density_matrix.hpp"

namespace cohpower {

/// SplitMix64 finalizer; used to derive independent seeds from one master.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives the seed of stream `stream` from a master seed. Streams with
/// distinct indices are statistically independent, so parallel workers can
/// each own one without coordination.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// A random full-support density matrix, built as A A^dag / Tr(A A^dag) with
/// A complex Ginibre. Deterministic for a fixed generator state.
DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng);

}  // namespace cohpower

#endif  // COHPOWER_RANDOM_HPP
