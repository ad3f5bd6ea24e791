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

#include "qprob/state.hpp"

#include <cmath>
#include <string>

#include "format.hpp"
#include "qprob/error.hpp"

namespace qprob {

PureState::PureState(Vector v, double tol) : vec_(std::move(v)) {
    if (vec_.size() == 0 || !vec_.allFinite()) {
        throw Error(Errc::NotUnit, "pure state vector must be nonempty and finite");
    }
    if (!is_unit(vec_, tol)) {
        throw Error(Errc::NotUnit, "pure state norm " + detail::num(vec_.norm()) + " differs from 1");
    }
}

PureState PureState::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw Error(Errc::DimMismatch, "basis index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return PureState(std::move(v));
}

DensityOperator::DensityOperator(Operator op, double tol) : op_(std::move(op)) {
    require_valid(op_);
    double gap = hermitian_gap(op_);
    if (gap > tol) {
        throw Error(Errc::NotHermitian, "density operator: |rho - rho^dagger| = " + detail::num(gap));
    }
    double lowest = min_eigenvalue(op_, tol);
    if (lowest < -tol) {
        throw Error(Errc::NotPsd, "density operator: min eigenvalue " + detail::num(lowest));
    }
    double tr_gap = std::abs(op_.trace() - Complex(1.0));
    if (tr_gap > tol) {
        throw Error(Errc::NotNormalized, "density operator: |tr rho - 1| = " + detail::num(tr_gap));
    }
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
    return DensityOperator(identity(dim) / static_cast<double>(dim));
}

DensityOperator pure_to_density(const PureState &psi) {
    return DensityOperator(outer_product(psi.vec(), psi.vec()));
}

PureState superpose(const PureState &phi1, const PureState &phi2, Complex alpha, Complex beta, double tol) {
    if (phi1.dim() != phi2.dim()) {
        throw Error(Errc::DimMismatch, "superpose: states have different dimensions");
    }
    double overlap = std::abs(inner(phi1.vec(), phi2.vec()));
    if (overlap > tol) {
        throw Error(Errc::NotOrthogonal, "superpose: |<phi1, phi2>| = " + detail::num(overlap));
    }
    double weight = std::norm(alpha) + std::norm(beta);
    if (!std::isfinite(weight) || std::abs(weight - 1.0) > tol) {
        throw Error(Errc::BadWeights, "superpose: |alpha|^2 + |beta|^2 = " + detail::num(weight));
    }
    return PureState(alpha * phi1.vec() + beta * phi2.vec(), tol);
}

DensityOperator mix(std::span<const double> weights, std::span<const DensityOperator> states, double tol) {
    if (weights.size() != states.size() || states.empty()) {
        throw Error(Errc::BadWeights, "mix: need one weight per state and at least one state");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw Error(Errc::BadWeights, "mix: weights must be finite and nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > tol) {
        throw Error(Errc::BadWeights, "mix: weights sum to " + detail::num(total));
    }
    const auto dim = states.front().dim();
    Operator acc = Operator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].dim() != dim) {
            throw Error(Errc::DimMismatch, "mix: states have different dimensions");
        }
        acc += weights[k] * states[k].op();
    }
    return DensityOperator(std::move(acc), tol);
}

}  // namespace qprob
