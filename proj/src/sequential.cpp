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

#include "qprob/sequential.hpp"

#include <algorithm>
#include <cmath>

#include "qprob/error.hpp"

namespace qprob {
namespace {

void require_dims(const DensityOperator &rho, const KrausChannel &first, const KrausChannel &second) {
    if (first.dim() != rho.dim() || second.dim() != rho.dim()) {
        throw Error(Errc::DimMismatch, "sequential: state and channel dimensions differ");
    }
}

double direct_joint(const Operator &rho, const Operator &v, const Operator &w) {
    Operator wv = w * v;
    return (wv * rho * wv.adjoint()).trace().real();
}

}  // namespace

std::string product_label(const std::string &a, const std::string &b) { return a + "×" + b; }

SequentialResult sequential_joint(const DensityOperator &rho, const KrausChannel &first, const KrausChannel &second,
                                  double tol) {
    require_dims(rho, first, second);
    const auto na = static_cast<Eigen::Index>(first.size());
    const auto nb = static_cast<Eigen::Index>(second.size());
    Eigen::MatrixXd joint(na, nb);
    std::vector<std::string> labels;
    std::vector<Operator> elements;
    labels.reserve(static_cast<std::size_t>(na * nb));
    elements.reserve(static_cast<std::size_t>(na * nb));
    for (Eigen::Index i = 0; i < na; ++i) {
        const Operator &v = first.op(static_cast<std::size_t>(i));
        for (Eigen::Index j = 0; j < nb; ++j) {
            const Operator &w = second.op(static_cast<std::size_t>(j));
            joint(i, j) = std::max(0.0, direct_joint(rho.op(), v, w));
            Operator wv = w * v;
            Operator e = wv.adjoint() * wv;
            elements.push_back(0.5 * (e + e.adjoint()));
            labels.push_back(product_label(first.outcomes()[static_cast<std::size_t>(i)],
                                           second.outcomes()[static_cast<std::size_t>(j)]));
        }
    }
    std::vector<double> marginal(static_cast<std::size_t>(nb), 0.0);
    for (Eigen::Index j = 0; j < nb; ++j) {
        for (Eigen::Index i = 0; i < na; ++i) {
            marginal[static_cast<std::size_t>(j)] += joint(i, j);
        }
    }
    return SequentialResult{first.outcomes(), second.outcomes(), std::move(joint), std::move(marginal),
                            Povm(OutcomeSet(std::move(labels)), std::move(elements), tol)};
}

Eigen::MatrixXd joint_via_posteriors(const DensityOperator &rho, const KrausChannel &first,
                                     const KrausChannel &second, double tol) {
    require_dims(rho, first, second);
    const Povm second_povm = povm_from_channel(second, tol);
    Eigen::MatrixXd joint(static_cast<Eigen::Index>(first.size()), static_cast<Eigen::Index>(second.size()));
    for (std::size_t i = 0; i < first.size(); ++i) {
        Posterior post = posterior(rho, first, i, tol);
        for (std::size_t j = 0; j < second.size(); ++j) {
            double value;
            if (post.state) {
                const std::string &label = second.outcomes()[j];
                value = probability(*post.state, second_povm, std::span(&label, 1), tol) * post.prob;
            } else {
                value = std::max(0.0, direct_joint(rho.op(), first.op(i), second.op(j)));
            }
            joint(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
        }
    }
    return joint;
}

Eigen::MatrixXd reversed_joint(const DensityOperator &rho, const KrausChannel &first, const KrausChannel &second) {
    require_dims(rho, first, second);
    Eigen::MatrixXd out(static_cast<Eigen::Index>(first.size()), static_cast<Eigen::Index>(second.size()));
    for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = 0; j < second.size(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::max(0.0, direct_joint(rho.op(), second.op(j), first.op(i)));
        }
    }
    return out;
}

BayesCheck quantum_bayes_check(const DensityOperator &rho, const KrausChannel &first, const KrausChannel &second,
                               double tol) {
    require_dims(rho, first, second);
    BayesCheck out;
    const DensityOperator after_first = unconditional_posterior(rho, first, tol);
    out.lhs = outcome_probabilities(after_first, povm_from_channel(second, tol), tol);
    out.rhs = sequential_joint(rho, first, second, tol).marginal_second;
    for (std::size_t j = 0; j < out.lhs.size(); ++j) {
        out.max_gap = std::max(out.max_gap, std::abs(out.lhs[j] - out.rhs[j]));
    }
    return out;
}

}  // namespace qprob
