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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qprob/interference.hpp"
#include "qprob/measurement.hpp"
#include "qprob/state.hpp"

namespace qprob {

using Count = std::int64_t;
using CountMatrix = std::array<std::array<Count, 2>, 2>;

/// Counts for one ensemble of N systems and two dichotomic observables A, B.
///
///  n_a[i]        systems with A = a_i
///  n_b[j]        systems with B = b_j
///  n_joint[i][j] systems with A = a_i and B = b_j (not observable in general)
///  m[i][j]       systems in the filtered ensemble T_i that show B = b_j
///
/// Rows of n_joint sum to n_a, columns to n_b, and rows of m sum to n_a.
struct EnsembleCounts {
    Count N = 0;
    std::array<Count, 2> n_a{};
    std::array<Count, 2> n_b{};
    CountMatrix n_joint{};
    CountMatrix m{};
};

/// Throws InfeasibleCounts when any bookkeeping identity above fails.
void validate_counts(const EnsembleCounts &c);

struct DoubleStochastic {
    bool ok = false;
    double deviation = 0.0; // max |row or column sum - 1|
};

/// Every row and column of `p` sums to 1 within tol.
DoubleStochastic double_stochastic_check(const Eigen::MatrixXd &p, double tol = kDefaultTol);

struct FrequencyReport {
    Count N = 0;
    std::array<double, 2> p{}; // n_a[i] / N
    std::array<double, 2> q{}; // n_b[i] / N
    /// m[i][j] / n_a[i]; a row with n_a[i] == 0 is undefined and left at zero.
    std::array<std::array<double, 2>, 2> p_trans{};
    std::array<bool, 2> p_trans_defined{};
    /// Exact numerators over N: n_b[i] - m[0][i] - m[1][i].
    std::array<Count, 2> delta_numerator{};
    std::array<double, 2> delta{};
    /// Absent when m[0][i] * m[1][i] == 0.
    std::array<std::optional<double>, 2> lambda;
    DoubleStochastic double_stochastic;
};

FrequencyReport frequency_report(const EnsembleCounts &c, double tol = kDefaultTol);

/// N q_i - N p_1 p_1i - N p_2 p_2i - N delta_i, evaluated in integers. Zero
/// for every valid ensemble.
Count transformation_residual(const EnsembleCounts &c, const FrequencyReport &r, std::size_t i);

// ---------------------------------------------------------------------------
// Context models and the simulator.
// ---------------------------------------------------------------------------

/// Joint (A, B) distribution; filters leave B untouched, so m == n_joint.
struct ClassicalIndependent {
    Eigen::Matrix2d joint; // joint(i, j) = P(A = a_i, B = b_j)
};

/// Joint (A, B) distribution plus a filter kernel per branch: a system in
/// T_i with hidden value b is observed as b' with probability kernels[i](b, b').
struct ClassicalPerturbed {
    Eigen::Matrix2d joint;
    std::array<Eigen::Matrix2d, 2> kernels;
};

/// A measured on rho0 defines T_i; B is measured on the posterior state of
/// each T_i member, and independently on fresh copies of rho0 for n_b.
struct QuantumDriven {
    DensityOperator rho;
    KrausChannel first;
    KrausChannel second;
};

struct ContextModel {
    std::variant<ClassicalIndependent, ClassicalPerturbed, QuantumDriven> kind;
    std::uint64_t seed = 0;
};

/// Throws InvalidModel on unnormalized distributions or non-dichotomic channels.
void validate_model(const ContextModel &model, double tol = kDefaultTol);

/// Trials per RNG substream. Batch b of a run always uses the same substream,
/// so counts do not depend on how batches are spread over workers.
inline constexpr Count kTrialsPerBatch = Count{1} << 16;

/// Samples an ensemble of N systems. Deterministic in (model, N); `workers`
/// only changes wall time.
EnsembleCounts simulate(const ContextModel &model, Count N, unsigned workers = 1, double tol = kDefaultTol);

/// The hidden n_ij for quantum_driven runs: n_b split across rows in
/// proportion to n_a, adjusted so rows and columns both add up. Bookkeeping
/// only; no reported quantity depends on it.
CountMatrix synthesize_hidden_joint(const std::array<Count, 2> &n_a, const std::array<Count, 2> &n_b);

struct ConvergenceRow {
    Count N = 0;
    std::uint64_t seed = 0;
    std::array<double, 2> delta{};
    std::array<std::optional<double>, 2> lambda;
    /// Strongest class among the defined lambdas (hyperbolic > trigonometric > classical).
    TransformKind kind = TransformKind::Classical;
};

struct LimitSummary {
    double delta_estimate = 0.0;              // mean over seeds at the largest N
    std::optional<double> lambda_estimate;    // mean of the defined lambdas at the largest N
    double scaled_deviation = 0.0;            // sqrt(N) * sample std of lambda at the largest N
    std::optional<Classification> classification;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows; // ordered by N, then seed
    std::array<LimitSummary, 2> limit;
};

/// Runs `simulate` for every (N, seed) pair. `schedule` must be strictly increasing.
ConvergenceTable convergence_study(const ContextModel &model, std::span<const Count> schedule,
                                   std::span<const std::uint64_t> seeds, unsigned workers = 1,
                                   double tol = kDefaultTol);

}  // namespace qprob
