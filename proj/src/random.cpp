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

#include "qprob/random.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qprob {
namespace {

std::vector<std::string> numbered(const std::string &prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k) {
        out.push_back(prefix + std::to_string(k));
    }
    return out;
}

}  // namespace

Operator random_ginibre(std::size_t rows, std::size_t cols, Rng &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Operator g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            double re = gauss(rng);
            double im = gauss(rng);
            g(r, c) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    return g;
}

Operator random_unitary(std::size_t dim, Rng &rng) {
    Operator g = random_ginibre(dim, dim, rng);
    Eigen::HouseholderQR<Operator> qr(g);
    Operator q = qr.householderQ();
    Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        Complex d = r(k, k);
        double mag = std::abs(d);
        if (mag > 0.0) {
            q.col(k) *= d / mag;
        }
    }
    return q;
}

Operator random_hermitian(std::size_t dim, Rng &rng) {
    Operator g = random_ginibre(dim, dim, rng);
    return 0.5 * (g + g.adjoint());
}

PureState random_pure_state(std::size_t dim, Rng &rng) {
    Vector v = random_ginibre(dim, 1, rng).col(0);
    return PureState(v / v.norm());
}

DensityOperator random_density(std::size_t dim, Rng &rng, std::size_t rank) {
    if (rank == 0 || rank > dim) {
        rank = dim;
    }
    Operator g = random_ginibre(dim, rank, rng);
    Operator rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(0.5 * (rho + rho.adjoint()));
}

KrausChannel random_kraus_channel(std::size_t dim, std::size_t n_outcomes, Rng &rng, const std::string &prefix) {
    Operator u = random_unitary(dim * n_outcomes, rng);
    auto d = static_cast<Eigen::Index>(dim);
    std::vector<Operator> ops;
    for (std::size_t k = 0; k < n_outcomes; ++k) {
        ops.push_back(u.block(static_cast<Eigen::Index>(k) * d, 0, d, d));
    }
    return KrausChannel(OutcomeSet(numbered(prefix, n_outcomes)), std::move(ops));
}

KrausChannel random_projective_channel(std::size_t dim, Rng &rng, const std::string &prefix) {
    Operator u = random_unitary(dim, rng);
    std::uniform_int_distribution<std::size_t> pick(1, dim - 1);
    auto r = static_cast<Eigen::Index>(dim == 1 ? 1 : pick(rng));
    auto d = static_cast<Eigen::Index>(dim);
    Operator p = u.leftCols(r) * u.leftCols(r).adjoint();
    p = 0.5 * (p + p.adjoint());
    Operator q = Operator::Identity(d, d) - p;
    return KrausChannel(OutcomeSet(numbered(prefix, 2)), {p, q});
}

}  // namespace qprob
