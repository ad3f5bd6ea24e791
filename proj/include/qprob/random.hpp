// Copyright 2026 The qprob Authors
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

#pragma once

#include <cstddef>
#include <random>

#include "qprob/measurement.hpp"
#include "qprob/state.hpp"

namespace qprob {

using Rng = std::mt19937_64;

/// Matrix with i.i.d. standard complex Gaussian entries.
Operator random_ginibre(std::size_t rows, std::size_t cols, Rng &rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with the phase fix).
Operator random_unitary(std::size_t dim, Rng &rng);

Operator random_hermitian(std::size_t dim, Rng &rng);

PureState random_pure_state(std::size_t dim, Rng &rng);

/// rank == 0 means full rank.
DensityOperator random_density(std::size_t dim, Rng &rng, std::size_t rank = 0);

/// Kraus channel from the blocks of a random isometry C^dim -> C^(dim * n_outcomes).
/// Labels are prefix + "1", prefix + "2", ...
KrausChannel random_kraus_channel(std::size_t dim, std::size_t n_outcomes, Rng &rng, const std::string &prefix);

/// Two-outcome projective channel: a random basis split into complementary
/// projections of ranks r and dim - r, with 1 <= r < dim chosen at random.
KrausChannel random_projective_channel(std::size_t dim, Rng &rng, const std::string &prefix);

}  // namespace qprob
