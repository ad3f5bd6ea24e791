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
#include <span>

#include "qprob/operator.hpp"

namespace qprob {

/// Unit vector in a finite-dimensional Hilbert space.
class PureState {
   public:
    /// Throws NotUnit when | ||v|| - 1 | > tol.
    explicit PureState(Vector v, double tol = kDefaultTol);

    const Vector &vec() const noexcept { return vec_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(vec_.size()); }

    /// Computational basis vector e_k.
    static PureState basis(std::size_t dim, std::size_t k);

   private:
    Vector vec_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
///
/// Every constructor validates; a DensityOperator that exists is a valid
/// state within the tolerance it was built with.
class DensityOperator {
   public:
    explicit DensityOperator(Operator op, double tol = kDefaultTol);

    const Operator &op() const noexcept { return op_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(op_.rows()); }

    static DensityOperator maximally_mixed(std::size_t dim);

   private:
    Operator op_;
};

/// |psi><psi|
DensityOperator pure_to_density(const PureState &psi);

/// alpha*phi1 + beta*phi2 for orthonormal phi1, phi2 and |alpha|^2 + |beta|^2 = 1.
/// Non-orthogonal inputs are rejected (NotOrthogonal); bad weights raise BadWeights.
PureState superpose(const PureState &phi1, const PureState &phi2, Complex alpha, Complex beta,
                    double tol = kDefaultTol);

/// Convex combination sum_k weights[k] * states[k].
DensityOperator mix(std::span<const double> weights, std::span<const DensityOperator> states,
                    double tol = kDefaultTol);

}  // namespace qprob
