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

#include "qprob/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "format.hpp"
#include "qprob/error.hpp"

namespace qprob {
namespace {

void require_same_dim(std::span<const Operator> ops, const char *what) {
    if (ops.empty()) {
        throw Error(Errc::EmptyOutcomes, std::string(what) + ": no operators");
    }
    for (const auto &op : ops) {
        require_valid(op);
        if (op.rows() != ops.front().rows()) {
            throw Error(Errc::DimMismatch, std::string(what) + ": operators have different dimensions");
        }
    }
}

void require_dim(std::size_t expected, std::size_t got, const char *what) {
    if (expected != got) {
        throw Error(Errc::DimMismatch, std::string(what) + ": dimension " + std::to_string(got) + " vs " +
                                           std::to_string(expected));
    }
}

double clamp_unit(double p, double tol) {
    if (p < 0.0 && p >= -tol) {
        return 0.0;
    }
    if (p > 1.0 && p <= 1.0 + tol) {
        return 1.0;
    }
    return p;
}

}  // namespace

OutcomeSet::OutcomeSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw Error(Errc::EmptyOutcomes, "outcome set is empty");
    }
    std::unordered_set<std::string> seen;
    for (const auto &l : labels_) {
        if (!seen.insert(l).second) {
            throw Error(Errc::DuplicateLabel, "duplicate outcome label '" + l + "'");
        }
    }
}

std::size_t OutcomeSet::index_of(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw Error(Errc::UnknownLabel, "unknown outcome label '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

double normalization_gap(std::span<const Operator> elements) {
    Operator sum = Operator::Zero(elements.front().rows(), elements.front().cols());
    for (const auto &e : elements) {
        sum += e;
    }
    return max_abs_diff(sum, identity(static_cast<std::size_t>(sum.rows())));
}

double completeness_gap(std::span<const Operator> kraus_ops) {
    Operator sum = Operator::Zero(kraus_ops.front().cols(), kraus_ops.front().cols());
    for (const auto &v : kraus_ops) {
        sum += v.adjoint() * v;
    }
    return max_abs_diff(sum, identity(static_cast<std::size_t>(sum.rows())));
}

Povm::Povm(OutcomeSet outcomes, std::vector<Operator> elements, double tol)
    : outcomes_(std::move(outcomes)), elements_(std::move(elements)) {
    if (elements_.size() != outcomes_.size()) {
        throw Error(Errc::DimMismatch, "povm: " + std::to_string(elements_.size()) + " elements for " +
                                           std::to_string(outcomes_.size()) + " outcomes");
    }
    require_same_dim(elements_, "povm");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!is_hermitian(elements_[i], tol)) {
            throw Error(Errc::NotHermitian, "povm element '" + outcomes_[i] + "' is not Hermitian");
        }
        double lowest = min_eigenvalue(elements_[i], tol);
        if (lowest < -tol) {
            throw Error(Errc::NotPsd, "povm element '" + outcomes_[i] + "' has eigenvalue " + detail::num(lowest));
        }
    }
    double gap = normalization_gap(elements_);
    if (gap > tol) {
        throw Error(Errc::NotNormalized, "povm elements do not sum to identity, gap " + detail::num(gap));
    }
}

Operator Povm::element_sum(std::span<const std::string> subset) const {
    std::set<std::size_t> picked;
    for (const auto &label : subset) {
        picked.insert(outcomes_.index_of(label));
    }
    auto d = static_cast<Eigen::Index>(dim());
    Operator sum = Operator::Zero(d, d);
    for (auto i : picked) {
        sum += elements_[i];
    }
    return sum;
}

KrausChannel::KrausChannel(OutcomeSet outcomes, std::vector<Operator> kraus_ops, double tol)
    : outcomes_(std::move(outcomes)), ops_(std::move(kraus_ops)) {
    if (ops_.size() != outcomes_.size()) {
        throw Error(Errc::DimMismatch, "kraus channel: " + std::to_string(ops_.size()) + " operators for " +
                                           std::to_string(outcomes_.size()) + " outcomes");
    }
    require_same_dim(ops_, "kraus channel");
    double gap = completeness_gap(ops_);
    if (gap > tol) {
        throw Error(Errc::NotNormalized, "kraus operators violate sum V^dagger V = I, gap " + detail::num(gap));
    }
}

KrausChannel KrausChannel::identity_channel(std::size_t dim, std::string label) {
    return KrausChannel(OutcomeSet({std::move(label)}), {identity(dim)});
}

bool KrausChannel::is_projective(double tol) const {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        if (!is_projection(ops_[i], tol)) {
            return false;
        }
        for (std::size_t k = i + 1; k < ops_.size(); ++k) {
            if ((ops_[i] * ops_[k]).cwiseAbs().maxCoeff() > tol) {
                return false;
            }
        }
    }
    return true;
}

double probability(const DensityOperator &rho, const Povm &m, std::span<const std::string> subset, double tol) {
    require_dim(m.dim(), rho.dim(), "probability");
    Operator e = m.element_sum(subset);
    return clamp_unit((rho.op() * e).trace().real(), tol);
}

std::vector<double> outcome_probabilities(const DensityOperator &rho, const Povm &m, double tol) {
    require_dim(m.dim(), rho.dim(), "outcome_probabilities");
    std::vector<double> out;
    out.reserve(m.size());
    for (const auto &e : m.elements()) {
        out.push_back(clamp_unit((rho.op() * e).trace().real(), tol));
    }
    return out;
}

Povm povm_from_channel(const KrausChannel &ch, double tol) {
    std::vector<Operator> elements;
    elements.reserve(ch.size());
    for (const auto &v : ch.kraus_ops()) {
        Operator e = v.adjoint() * v;
        elements.push_back(0.5 * (e + e.adjoint()));
    }
    return Povm(ch.outcomes(), std::move(elements), tol);
}

const DensityOperator &Posterior::state_or_throw() const {
    if (!state) {
        throw Error(Errc::ZeroProbabilityOutcome,
                    "posterior state undefined for outcome probability " + detail::num(prob));
    }
    return *state;
}

Posterior posterior(const DensityOperator &rho, const KrausChannel &ch, std::size_t index, double tol) {
    require_dim(ch.dim(), rho.dim(), "posterior");
    const Operator &v = ch.op(index);
    Operator sigma = v * rho.op() * v.adjoint();
    Posterior out;
    out.prob = clamp_unit(sigma.trace().real(), tol);
    if (out.prob > tol) {
        Operator normalized = sigma / sigma.trace().real();
        out.state.emplace(0.5 * (normalized + normalized.adjoint()), tol);
    }
    return out;
}

Posterior posterior(const DensityOperator &rho, const KrausChannel &ch, const std::string &label, double tol) {
    return posterior(rho, ch, ch.outcomes().index_of(label), tol);
}

DensityOperator unconditional_posterior(const DensityOperator &rho, const KrausChannel &ch, double tol) {
    require_dim(ch.dim(), rho.dim(), "unconditional_posterior");
    auto d = static_cast<Eigen::Index>(rho.dim());
    Operator acc = Operator::Zero(d, d);
    for (const auto &v : ch.kraus_ops()) {
        acc += v * rho.op() * v.adjoint();
    }
    return DensityOperator(0.5 * (acc + acc.adjoint()), tol);
}

KrausChannel projective_channel(std::span<const PureState> basis, std::vector<std::string> labels, double tol) {
    if (basis.empty()) {
        throw Error(Errc::EmptyOutcomes, "projective_channel: empty basis");
    }
    std::vector<Operator> ops;
    ops.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].dim() != basis.front().dim()) {
            throw Error(Errc::DimMismatch, "projective_channel: basis vectors have different dimensions");
        }
        for (std::size_t l = 0; l < k; ++l) {
            double overlap = std::abs(inner(basis[l].vec(), basis[k].vec()));
            if (overlap > tol) {
                throw Error(Errc::NotOrthogonal, "projective_channel: basis overlap " + detail::num(overlap));
            }
        }
        ops.push_back(outer_product(basis[k].vec(), basis[k].vec()));
    }
    return KrausChannel(OutcomeSet(std::move(labels)), std::move(ops), tol);
}

Povm filter_povm(const PureState &phi1, const PureState &phi2, double tol) {
    if (phi1.dim() != phi2.dim()) {
        throw Error(Errc::DimMismatch, "filter_povm: states have different dimensions");
    }
    if (phi1.dim() < 2) {
        throw Error(Errc::DimMismatch, "filter_povm: needs dimension >= 2");
    }
    double overlap = std::abs(inner(phi1.vec(), phi2.vec()));
    if (overlap > tol) {
        throw Error(Errc::NotOrthogonal, "filter_povm: |<phi1, phi2>| = " + detail::num(overlap));
    }
    Operator p1 = outer_product(phi1.vec(), phi1.vec());
    Operator p2 = outer_product(phi2.vec(), phi2.vec());
    Operator rest = identity(phi1.dim()) - p1 - p2;
    return Povm(OutcomeSet({"phi1", "phi2", "neither"}), {p1, p2, rest}, tol);
}

}  // namespace qprob
