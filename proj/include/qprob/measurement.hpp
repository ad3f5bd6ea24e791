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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qprob/operator.hpp"
#include "qprob/state.hpp"

namespace qprob {

/// Ordered, nonempty list of distinct outcome labels.
class OutcomeSet {
   public:
    explicit OutcomeSet(std::vector<std::string> labels);

    const std::vector<std::string> &labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }
    const std::string &operator[](std::size_t i) const { return labels_.at(i); }

    /// Throws UnknownLabel.
    std::size_t index_of(const std::string &label) const;

   private:
    std::vector<std::string> labels_;
};

/// Max entrywise |sum_k ops[k] - I|.
double normalization_gap(std::span<const Operator> elements);

/// Max entrywise |sum_k ops[k]^dagger ops[k] - I|.
double completeness_gap(std::span<const Operator> kraus_ops);

/// Positive operator-valued measure on a finite outcome set.
///
/// Validated once at construction: every element PSD and the elements sum to
/// the identity. Probabilities computed from a Povm trust that check.
class Povm {
   public:
    Povm(OutcomeSet outcomes, std::vector<Operator> elements, double tol = kDefaultTol);

    const OutcomeSet &outcomes() const noexcept { return outcomes_; }
    const std::vector<Operator> &elements() const noexcept { return elements_; }
    const Operator &element(std::size_t i) const { return elements_.at(i); }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(elements_.front().rows()); }
    std::size_t size() const noexcept { return elements_.size(); }

    /// Sum of the elements whose labels are in `subset` (duplicates counted once).
    Operator element_sum(std::span<const std::string> subset) const;

   private:
    OutcomeSet outcomes_;
    std::vector<Operator> elements_;
};

/// Single-channel instrument given by Kraus operators V(a_i), sum V^dagger V = I.
class KrausChannel {
   public:
    KrausChannel(OutcomeSet outcomes, std::vector<Operator> kraus_ops, double tol = kDefaultTol);

    const OutcomeSet &outcomes() const noexcept { return outcomes_; }
    const std::vector<Operator> &kraus_ops() const noexcept { return ops_; }
    const Operator &op(std::size_t i) const { return ops_.at(i); }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(ops_.front().rows()); }
    std::size_t size() const noexcept { return ops_.size(); }

    /// Single-outcome channel {I}.
    static KrausChannel identity_channel(std::size_t dim, std::string label = "id");

    /// True when the Kraus operators are mutually orthogonal projections.
    bool is_projective(double tol = kDefaultTol) const;

   private:
    OutcomeSet outcomes_;
    std::vector<Operator> ops_;
};

/// tr{rho M(E)} for E = `subset`. Values within tol of 0 or 1 are clamped onto [0, 1].
double probability(const DensityOperator &rho, const Povm &m, std::span<const std::string> subset,
                   double tol = kDefaultTol);

/// Probability of every single outcome, in outcome order.
std::vector<double> outcome_probabilities(const DensityOperator &rho, const Povm &m, double tol = kDefaultTol);

/// M_i = V_i^dagger V_i.
Povm povm_from_channel(const KrausChannel &ch, double tol = kDefaultTol);

struct Posterior {
    double prob = 0.0;
    /// Absent when prob <= tol: normalization would divide by (near) zero.
    std::optional<DensityOperator> state;

    /// Throws ZeroProbabilityOutcome when `state` is absent.
    const DensityOperator &state_or_throw() const;
};

/// Outcome probability tr[V rho V^dagger] and normalized post-measurement state.
Posterior posterior(const DensityOperator &rho, const KrausChannel &ch, const std::string &label,
                    double tol = kDefaultTol);
Posterior posterior(const DensityOperator &rho, const KrausChannel &ch, std::size_t index, double tol = kDefaultTol);

/// sum_i V_i rho V_i^dagger: the state after the measurement with outcomes discarded.
DensityOperator unconditional_posterior(const DensityOperator &rho, const KrausChannel &ch,
                                        double tol = kDefaultTol);

/// Rank-one projective channel {|e_k><e_k|} over an orthonormal basis
/// (NotOrthogonal otherwise). The basis must span the space.
KrausChannel projective_channel(std::span<const PureState> basis, std::vector<std::string> labels,
                                double tol = kDefaultTol);

/// Three-outcome filter measurement {|phi1><phi1|, |phi2><phi2|, I - both}
/// with labels "phi1", "phi2", "neither".
Povm filter_povm(const PureState &phi1, const PureState &phi2, double tol = kDefaultTol);

}  // namespace qprob
