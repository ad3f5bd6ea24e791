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

#include "qprob/interference.hpp"

#include <algorithm>
#include <cmath>

#include "format.hpp"
#include "qprob/error.hpp"
#include "qprob/random.hpp"
#include "qprob/sequential.hpp"

namespace qprob {
namespace {

double clamp_cos(double c, double tol) {
    if (c > 1.0 && c <= 1.0 + tol) {
        return 1.0;
    }
    if (c < -1.0 && c >= -1.0 - tol) {
        return -1.0;
    }
    return c;
}

}  // namespace

SuperpositionDecomposition superposition_rule(const PureState &phi1, const PureState &phi2, Complex alpha,
                                              Complex beta, const Povm &m, std::span<const std::string> subset,
                                              double tol) {
    const PureState phi3 = superpose(phi1, phi2, alpha, beta, tol);
    if (phi1.dim() != m.dim()) {
        throw Error(Errc::DimMismatch, "superposition_rule: state and POVM dimensions differ");
    }
    const double mu1 = probability(pure_to_density(phi1), m, subset, tol);
    const double mu2 = probability(pure_to_density(phi2), m, subset, tol);
    const Operator e = m.element_sum(subset);

    SuperpositionDecomposition out;
    out.total = probability(pure_to_density(phi3), m, subset, tol);
    out.term1 = std::norm(alpha) * mu1;
    out.term2 = std::norm(beta) * mu2;
    out.cross = 2.0 * (std::conj(alpha) * beta * inner(phi1.vec(), e * phi2.vec())).real();
    const double denom = 2.0 * std::abs(alpha * beta) * std::sqrt(mu1 * mu2);
    if (denom > tol) {
        out.cos_theta = clamp_cos(out.cross / denom, tol);
    }
    return out;
}

MixtureDecomposition mixture_rule(const DensityOperator &rho1, const DensityOperator &rho2, double weight,
                                  const Povm &m, std::span<const std::string> subset, double tol) {
    if (!std::isfinite(weight) || weight < 0.0 || weight > 1.0) {
        throw Error(Errc::BadWeights, "mixture_rule: weight " + detail::num(weight) + " outside [0, 1]");
    }
    const std::array<double, 2> w{weight, 1.0 - weight};
    const std::array<DensityOperator, 2> states{rho1, rho2};
    const DensityOperator mixed = mix(w, states, tol);
    MixtureDecomposition out;
    out.total = probability(mixed, m, subset, tol);
    out.term1 = weight * probability(rho1, m, subset, tol);
    out.term2 = (1.0 - weight) * probability(rho2, m, subset, tol);
    return out;
}

std::string_view to_string(TransformKind kind) {
    switch (kind) {
        case TransformKind::Classical: return "classical";
        case TransformKind::Trigonometric: return "trigonometric";
        case TransformKind::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

Classification classify_transformation(double lambda, double tol) {
    Classification c;
    c.sign = lambda < 0.0 ? -1 : 1;
    const double mag = std::abs(lambda);
    if (mag <= tol) {
        c.kind = TransformKind::Classical;
        c.phase = 0.0;
    } else if (mag < 1.0) {
        c.kind = TransformKind::Trigonometric;
        c.phase = std::acos(lambda);
    } else {
        // |lambda| == 1 lands here.
        c.kind = TransformKind::Hyperbolic;
        c.phase = std::acosh(mag);
    }
    return c;
}

LambdaBounds lambda_bounds(double p1, double p2) {
    if (!(p1 > 0.0) || !(p2 > 0.0) || !std::isfinite(p1) || !std::isfinite(p2)) {
        throw Error(Errc::DegenerateJoint, "lambda_bounds: joints must be positive, got " + detail::num(p1) + ", " +
                                               detail::num(p2));
    }
    const double denom = 2.0 * std::sqrt(p1 * p2);
    return {-(p1 + p2) / denom, (1.0 - p1 - p2) / denom};
}

LambdaReport lambda_report(const DensityOperator &rho, const KrausChannel &first, const KrausChannel &second,
                           double tol) {
    if (first.size() != 2) {
        throw Error(Errc::InvalidModel,
                    "lambda_report: first measurement must have 2 outcomes, has " + std::to_string(first.size()));
    }
    const SequentialResult seq = sequential_joint(rho, first, second, tol);
    const Eigen::MatrixXd rev = reversed_joint(rho, first, second);
    const std::vector<double> direct = outcome_probabilities(rho, povm_from_channel(second, tol), tol);

    LambdaReport report;
    for (std::size_t j = 0; j < second.size(); ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        LambdaEntry e;
        e.outcome = second.outcomes()[j];
        e.direct = direct[j];
        for (Eigen::Index i = 0; i < 2; ++i) {
            auto k = static_cast<std::size_t>(i);
            e.joint[k] = seq.joint(i, jj);
            e.reversed[k] = rev(i, jj);
            if (e.joint[k] > tol) {
                e.gamma[k] = e.reversed[k] / e.joint[k];
            }
        }
        e.degenerate = !(e.joint[0] > tol && e.joint[1] > tol);
        if (!e.degenerate) {
            const double p1 = e.joint[0];
            const double p2 = e.joint[1];
            e.lambda = (e.direct - p1 - p2) / (2.0 * std::sqrt(p1 * p2));
            e.lambda_via_gamma =
                0.5 * (std::sqrt(p1 / p2) * (*e.gamma[0] - 1.0) + std::sqrt(p2 / p1) * (*e.gamma[1] - 1.0));
            e.bounds = lambda_bounds(p1, p2);
            e.classification = classify_transformation(*e.lambda, tol);
        }
        report.entries.push_back(std::move(e));
    }
    for (const auto &v : first.kraus_ops()) {
        for (const auto &w : second.kraus_ops()) {
            Operator comm = w * v - v * w;
            report.max_commutator = std::max(report.max_commutator, comm.cwiseAbs().maxCoeff());
        }
    }
    return report;
}

double projective_lambda(const DensityOperator &rho, std::span<const PureState, 2> phi,
                         std::span<const PureState, 2> psi, std::size_t j, double tol) {
    if (rho.dim() != 2) {
        throw Error(Errc::DimMismatch, "projective_lambda: closed form needs dimension 2, got " +
                                           std::to_string(rho.dim()));
    }
    if (j > 1) {
        throw Error(Errc::UnknownLabel, "projective_lambda: outcome index must be 0 or 1");
    }
    for (const auto *basis : {&phi, &psi}) {
        if ((*basis)[0].dim() != 2 || (*basis)[1].dim() != 2) {
            throw Error(Errc::DimMismatch, "projective_lambda: basis vectors must have dimension 2");
        }
        double overlap = std::abs(inner((*basis)[0].vec(), (*basis)[1].vec()));
        if (overlap > tol) {
            throw Error(Errc::NotOrthogonal, "projective_lambda: basis overlap " + detail::num(overlap));
        }
    }
    const Operator root = psd_sqrt(rho.op(), tol);
    const Vector r1 = root * phi[0].vec();
    const Vector r2 = root * phi[1].vec();
    const Vector &target = psi[j].vec();
    const Complex c1 = inner(target, phi[0].vec()); // <psi_j, phi_1>
    const Complex c2 = inner(target, phi[1].vec()); // <psi_j, phi_2>
    const double factors[] = {std::abs(c1), std::abs(c2), r1.norm(), r2.norm()};
    for (double f : factors) {
        if (f <= tol) {
            throw Error(Errc::DegenerateOverlap, "projective_lambda: vanishing denominator factor " + detail::num(f));
        }
    }
    const Complex numer = inner(r1, r2) * inner(phi[1].vec(), target) * c1;
    return std::abs(numer.real()) / (factors[0] * factors[1] * factors[2] * factors[3]);
}

std::optional<HyperbolicScenario> search_hyperbolic(std::uint64_t seed, std::size_t dim, double min_abs_lambda,
                                                    std::size_t max_attempts, double tol) {
    Rng rng(seed);
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        DensityOperator rho = pure_to_density(random_pure_state(dim, rng));
        KrausChannel first = random_kraus_channel(dim, 2, rng, "a");
        KrausChannel second = random_kraus_channel(dim, 2, rng, "b");
        LambdaReport report = lambda_report(rho, first, second, tol);
        for (std::size_t j = 0; j < report.entries.size(); ++j) {
            const auto &lam = report.entries[j].lambda;
            if (lam && std::abs(*lam) >= min_abs_lambda) {
                return HyperbolicScenario{std::move(rho), std::move(first), std::move(second), j, *lam, attempt};
            }
        }
    }
    return std::nullopt;
}

}  // namespace qprob
