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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qprob/measurement.hpp"

namespace qprob {

/// Statistics of "first, then second" on one initial state.
struct SequentialResult {
    OutcomeSet first;
    OutcomeSet second;
    Eigen::MatrixXd joint;               // joint(i, j) = P{(a_i, b_j)}
    std::vector<double> marginal_second; // sum over i of joint(i, j)
    Povm composed_povm;                  // V_i^dagger W_j^dagger W_j V_i, labels "a_i×b_j", row-major in (i, j)
};

/// Label of the (a, b) outcome of the composed measurement.
std::string product_label(const std::string &a, const std::string &b);

/// Joint probabilities tr[W_j V_i rho V_i^dagger W_j^dagger] and the composed POVM.
SequentialResult sequential_joint(const DensityOperator &rho, const KrausChannel &first, const KrausChannel &second,
                                  double tol = kDefaultTol);

/// Same joint table, built by chaining posterior(first) and then the second
/// measurement's probability on it. Rows whose first outcome has probability
/// <= tol fall back to the direct trace form.
Eigen::MatrixXd joint_via_posteriors(const DensityOperator &rho, const KrausChannel &first,
                                     const KrausChannel &second, double tol = kDefaultTol);

/// Reverse-order joint: entry (i, j) = tr[rho W_j^dagger V_i^dagger V_i W_j],
/// the probability of b_j followed by a_i.
Eigen::MatrixXd reversed_joint(const DensityOperator &rho, const KrausChannel &first, const KrausChannel &second);

struct BayesCheck {
    std::vector<double> lhs; // second-measurement probabilities on the unconditional post-first state
    std::vector<double> rhs; // marginal of the sequential joint
    double max_gap = 0.0;
};

BayesCheck quantum_bayes_check(const DensityOperator &rho, const KrausChannel &first, const KrausChannel &second,
                               double tol = kDefaultTol);

}  // namespace qprob
