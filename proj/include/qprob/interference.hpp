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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qprob/measurement.hpp"
#include "qprob/state.hpp"

namespace qprob {

// ---------------------------------------------------------------------------
// Superposition and mixture rules.
// ---------------------------------------------------------------------------

/// mu(E; rho3) for rho3 = |alpha phi1 + beta phi2><.| split into its two
/// weighted single-state terms and the cross term. Each piece is computed on
/// its own; nothing is derived by subtraction.
struct SuperpositionDecomposition {
    double total = 0.0;
    double term1 = 0.0; // |alpha|^2 mu(E; rho1)
    double term2 = 0.0; // |beta|^2 mu(E; rho2)
    double cross = 0.0; // 2 Re{conj(alpha) beta <phi1, M(E) phi2>}
    /// cross / (2 |alpha beta| sqrt(mu1 mu2)); absent when that denominator is <= tol.
    std::optional<double> cos_theta;
};

SuperpositionDecomposition superposition_rule(const PureState &phi1, const PureState &phi2, Complex alpha,
                                              Complex beta, const Povm &m, std::span<const std::string> subset,
                                              double tol = kDefaultTol);

struct MixtureDecomposition {
    double total = 0.0; // mu(E; w rho1 + (1 - w) rho2)
    double term1 = 0.0; // w mu(E; rho1)
    double term2 = 0.0; // (1 - w) mu(E; rho2)
};

MixtureDecomposition mixture_rule(const DensityOperator &rho1, const DensityOperator &rho2, double weight,
                                  const Povm &m, std::span<const std::string> subset, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Interference coefficient lambda and its classification.
// ---------------------------------------------------------------------------

enum class TransformKind { Classical, Trigonometric, Hyperbolic };

std::string_view to_string(TransformKind kind);

struct Classification {
    TransformKind kind = TransformKind::Classical;
    /// 0 for classical, arccos(lambda) in [0, pi] for trigonometric,
    /// arccosh|lambda| for hyperbolic.
    double phase = 0.0;
    /// Sign of lambda (+1 for lambda >= 0).
    int sign = 1;
};

/// |lambda| <= tol: classical; |lambda| < 1: trigonometric; |lambda| >= 1: hyperbolic.
Classification classify_transformation(double lambda, double tol = kDefaultTol);

struct LambdaBounds {
    double lo = 0.0;
    double hi = 0.0;
};

/// Admissible range of lambda given the two joints P{(a1, b)} and P{(a2, b)}:
/// [-(P1 + P2) / (2 sqrt(P1 P2)), (1 - P1 - P2) / (2 sqrt(P1 P2))].
/// Throws DegenerateJoint unless P1 P2 > 0.
LambdaBounds lambda_bounds(double p1, double p2);

/// Everything known about lambda for one outcome b_j of the second measurement.
struct LambdaEntry {
    std::string outcome;
    double direct = 0.0;                 // mu_B(b_j; rho0)
    std::array<double, 2> joint{};       // P{(a_i, b_j)}
    std::array<double, 2> reversed{};    // P{(b_j, a_i)}
    std::array<std::optional<double>, 2> gamma; // reversed / joint, absent when joint <= tol
    bool degenerate = false;             // some joint <= tol; the fields below are then absent
    std::optional<double> lambda;
    std::optional<double> lambda_via_gamma; // needs both gammas
    std::optional<LambdaBounds> bounds;
    std::optional<Classification> classification;
};

struct LambdaReport {
    std::vector<LambdaEntry> entries;
    /// max over (i, j) of the largest entry of |[W_j, V_i]|. Zero implies lambda = 0;
    /// lambda = 0 does not imply zero here.
    double max_commutator = 0.0;
};

/// Interference coefficients of "second" relative to "first then second".
/// `first` must have exactly two outcomes (InvalidModel otherwise).
LambdaReport lambda_report(const DensityOperator &rho, const KrausChannel &first, const KrausChannel &second,
                           double tol = kDefaultTol);

/// Closed-form |lambda_j| for rank-one projective measurements in dimension 2,
/// first in basis {phi1, phi2}, second in basis {psi1, psi2}; j is 0 or 1.
/// Throws NotOrthogonal / DimMismatch on bad bases and DegenerateOverlap when
/// any of <psi_j, phi_i>, ||sqrt(rho) phi_i|| is <= tol.
double projective_lambda(const DensityOperator &rho, std::span<const PureState, 2> phi,
                         std::span<const PureState, 2> psi, std::size_t j, double tol = kDefaultTol);

struct HyperbolicScenario {
    DensityOperator rho;
    KrausChannel first;
    KrausChannel second;
    std::size_t outcome = 0; // index into second
    double lambda = 0.0;
    std::size_t attempts = 0;
};

/// Random search over pure states and generic two-outcome Kraus channels for an
/// instance with |lambda_j| >= min_abs_lambda. Deterministic in `seed`.
std::optional<HyperbolicScenario> search_hyperbolic(std::uint64_t seed, std::size_t dim, double min_abs_lambda = 1.0,
                                                    std::size_t max_attempts = 100000, double tol = kDefaultTol);

}  // namespace qprob
