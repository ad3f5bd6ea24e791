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

#include "qprob/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "format.hpp"
#include "qprob/error.hpp"
#include "qprob/random.hpp"

namespace qprob {
namespace {

std::string counts_str(Count a, Count b) { return std::to_string(a) + " vs " + std::to_string(b); }

double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int draw2(double p0, Rng &rng) { return uniform01(rng) < p0 ? 0 : 1; }

// Draws a cell of a 2x2 distribution as (row, col).
std::pair<int, int> draw_cell(const Eigen::Matrix2d &joint, Rng &rng) {
    double u = uniform01(rng);
    double acc = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            acc += joint(i, j);
            if (u < acc) {
                return {i, j};
            }
        }
    }
    // u landed in the rounding slack above the cumulative total.
    for (int i = 1; i >= 0; --i) {
        for (int j = 1; j >= 0; --j) {
            if (joint(i, j) > 0.0) {
                return {i, j};
            }
        }
    }
    return {1, 1};
}

Rng substream(std::uint64_t seed, std::uint64_t batch, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32), stream};
    return Rng(seq);
}

struct Partial {
    std::array<Count, 2> n_a{};
    std::array<Count, 2> n_b{};
    CountMatrix n_joint{};
    CountMatrix m{};

    void add(const Partial &o) {
        for (int i = 0; i < 2; ++i) {
            n_a[i] += o.n_a[i];
            n_b[i] += o.n_b[i];
            for (int j = 0; j < 2; ++j) {
                n_joint[i][j] += o.n_joint[i][j];
                m[i][j] += o.m[i][j];
            }
        }
    }
};

// Outcome statistics a quantum_driven run samples from.
struct QuantumRates {
    std::array<double, 2> p_first{};
    std::array<std::array<double, 2>, 2> p_second_given{};
    std::array<double, 2> p_direct{};
};

QuantumRates quantum_rates(const QuantumDriven &q, double tol) {
    QuantumRates r;
    const Povm second_povm = povm_from_channel(q.second, tol);
    for (std::size_t i = 0; i < 2; ++i) {
        Posterior post = posterior(q.rho, q.first, i, tol);
        r.p_first[i] = post.prob;
        if (post.state) {
            auto probs = outcome_probabilities(*post.state, second_povm, tol);
            r.p_second_given[i] = {probs[0], probs[1]};
        } else {
            r.p_second_given[i] = {1.0, 0.0};
        }
    }
    auto direct = outcome_probabilities(q.rho, second_povm, tol);
    r.p_direct = {direct[0], direct[1]};
    return r;
}

struct BatchSampler {
    const ContextModel &model;
    std::optional<QuantumRates> rates;

    Partial run(std::uint64_t batch, Count trials) const {
        Partial out;
        Rng rng = substream(model.seed, batch, 0);
        if (const auto *ci = std::get_if<ClassicalIndependent>(&model.kind)) {
            for (Count t = 0; t < trials; ++t) {
                auto [a, b] = draw_cell(ci->joint, rng);
                out.n_joint[a][b] += 1;
                out.m[a][b] += 1;
            }
        } else if (const auto *cp = std::get_if<ClassicalPerturbed>(&model.kind)) {
            for (Count t = 0; t < trials; ++t) {
                auto [a, b] = draw_cell(cp->joint, rng);
                out.n_joint[a][b] += 1;
                int observed = draw2(cp->kernels[static_cast<std::size_t>(a)](b, 0), rng);
                out.m[a][observed] += 1;
            }
        } else {
            const QuantumRates &r = *rates;
            for (Count t = 0; t < trials; ++t) {
                int a = draw2(r.p_first[0], rng);
                int b = draw2(r.p_second_given[static_cast<std::size_t>(a)][0], rng);
                out.n_a[a] += 1;
                out.m[a][b] += 1;
            }
            Rng direct = substream(model.seed, batch, 1);
            for (Count t = 0; t < trials; ++t) {
                out.n_b[draw2(r.p_direct[0], direct)] += 1;
            }
        }
        return out;
    }
};

bool is_distribution(const Eigen::Matrix2d &p, double tol) {
    return p.allFinite() && p.minCoeff() >= 0.0 && std::abs(p.sum() - 1.0) <= tol;
}

bool is_row_stochastic(const Eigen::Matrix2d &k, double tol) {
    return k.allFinite() && k.minCoeff() >= 0.0 && std::abs(k.row(0).sum() - 1.0) <= tol &&
           std::abs(k.row(1).sum() - 1.0) <= tol;
}

TransformKind stronger(TransformKind a, TransformKind b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

}  // namespace

void validate_counts(const EnsembleCounts &c) {
    if (c.N < 1) {
        throw Error(Errc::InfeasibleCounts, "ensemble size must be positive");
    }
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (c.n_joint[i][j] < 0 || c.m[i][j] < 0) {
                throw Error(Errc::InfeasibleCounts, "counts must be nonnegative");
            }
        }
    }
    for (int i = 0; i < 2; ++i) {
        if (c.n_joint[i][0] + c.n_joint[i][1] != c.n_a[i]) {
            throw Error(Errc::InfeasibleCounts, "row " + std::to_string(i + 1) + " of n_joint does not sum to n_a: " +
                                                    counts_str(c.n_joint[i][0] + c.n_joint[i][1], c.n_a[i]));
        }
        if (c.n_joint[0][i] + c.n_joint[1][i] != c.n_b[i]) {
            throw Error(Errc::InfeasibleCounts, "column " + std::to_string(i + 1) +
                                                    " of n_joint does not sum to n_b: " +
                                                    counts_str(c.n_joint[0][i] + c.n_joint[1][i], c.n_b[i]));
        }
        if (c.m[i][0] + c.m[i][1] != c.n_a[i]) {
            throw Error(Errc::InfeasibleCounts, "row " + std::to_string(i + 1) + " of m does not sum to n_a: " +
                                                    counts_str(c.m[i][0] + c.m[i][1], c.n_a[i]));
        }
    }
    if (c.n_a[0] + c.n_a[1] != c.N || c.n_b[0] + c.n_b[1] != c.N) {
        throw Error(Errc::InfeasibleCounts, "n_a and n_b must each sum to N");
    }
}

DoubleStochastic double_stochastic_check(const Eigen::MatrixXd &p, double tol) {
    DoubleStochastic out;
    if (p.rows() == 0 || p.rows() != p.cols() || !p.allFinite()) {
        out.deviation = std::numeric_limits<double>::infinity();
        return out;
    }
    out.deviation = std::max((p.rowwise().sum().array() - 1.0).abs().maxCoeff(),
                             (p.colwise().sum().array() - 1.0).abs().maxCoeff());
    out.ok = out.deviation <= tol;
    return out;
}

FrequencyReport frequency_report(const EnsembleCounts &c, double tol) {
    validate_counts(c);
    FrequencyReport r;
    r.N = c.N;
    const auto n = static_cast<double>(c.N);
    for (std::size_t i = 0; i < 2; ++i) {
        r.p[i] = static_cast<double>(c.n_a[i]) / n;
        r.q[i] = static_cast<double>(c.n_b[i]) / n;
        r.p_trans_defined[i] = c.n_a[i] > 0;
        for (std::size_t j = 0; j < 2; ++j) {
            r.p_trans[i][j] = r.p_trans_defined[i] ? static_cast<double>(c.m[i][j]) / static_cast<double>(c.n_a[i])
                                                   : 0.0;
        }
    }
    for (std::size_t i = 0; i < 2; ++i) {
        // n_0i + n_1i == n_b[i], so this is the hidden-count form with the hidden counts summed out.
        r.delta_numerator[i] = c.n_b[i] - c.m[0][i] - c.m[1][i];
        r.delta[i] = static_cast<double>(r.delta_numerator[i]) / n;
        const Count mm = c.m[0][i] * c.m[1][i];
        if (mm > 0) {
            r.lambda[i] = static_cast<double>(r.delta_numerator[i]) / (2.0 * std::sqrt(static_cast<double>(mm)));
        }
    }
    Eigen::MatrixXd pt(2, 2);
    pt << r.p_trans[0][0], r.p_trans[0][1], r.p_trans[1][0], r.p_trans[1][1];
    r.double_stochastic = double_stochastic_check(pt, tol);
    return r;
}

Count transformation_residual(const EnsembleCounts &c, const FrequencyReport &r, std::size_t i) {
    // N p_k p_ki = n_a[k] * m[k][i] / n_a[k] = m[k][i]; an empty row contributes m[k][i] == 0.
    return c.n_b[i] - c.m[0][i] - c.m[1][i] - r.delta_numerator[i];
}

void validate_model(const ContextModel &model, double tol) {
    if (const auto *ci = std::get_if<ClassicalIndependent>(&model.kind)) {
        if (!is_distribution(ci->joint, tol)) {
            throw Error(Errc::InvalidModel, "classical_independent: joint is not a probability distribution");
        }
    } else if (const auto *cp = std::get_if<ClassicalPerturbed>(&model.kind)) {
        if (!is_distribution(cp->joint, tol)) {
            throw Error(Errc::InvalidModel, "classical_perturbed: joint is not a probability distribution");
        }
        for (const auto &k : cp->kernels) {
            if (!is_row_stochastic(k, tol)) {
                throw Error(Errc::InvalidModel, "classical_perturbed: filter kernel rows must be distributions");
            }
        }
    } else {
        const auto &q = std::get<QuantumDriven>(model.kind);
        if (q.first.size() != 2 || q.second.size() != 2) {
            throw Error(Errc::InvalidModel, "quantum_driven: both channels must have exactly two outcomes");
        }
        if (q.first.dim() != q.rho.dim() || q.second.dim() != q.rho.dim()) {
            throw Error(Errc::InvalidModel, "quantum_driven: state and channel dimensions differ");
        }
    }
}

CountMatrix synthesize_hidden_joint(const std::array<Count, 2> &n_a, const std::array<Count, 2> &n_b) {
    const Count n = n_a[0] + n_a[1];
    CountMatrix out{};
    if (n == 0) {
        return out;
    }
    auto share = static_cast<Count>(
        std::llround(static_cast<double>(n_b[0]) * static_cast<double>(n_a[0]) / static_cast<double>(n)));
    share = std::clamp(share, std::max<Count>(0, n_a[0] - n_b[1]), std::min(n_a[0], n_b[0]));
    out[0][0] = share;
    out[0][1] = n_a[0] - share;
    out[1][0] = n_b[0] - share;
    out[1][1] = n_b[1] - out[0][1];
    return out;
}

EnsembleCounts simulate(const ContextModel &model, Count N, unsigned workers, double tol) {
    if (N < 1) {
        throw Error(Errc::InvalidModel, "simulate: ensemble size must be positive");
    }
    validate_model(model, tol);
    BatchSampler sampler{model, std::nullopt};
    if (const auto *q = std::get_if<QuantumDriven>(&model.kind)) {
        sampler.rates = quantum_rates(*q, tol);
    }

    const auto n_batches = static_cast<std::uint64_t>((N + kTrialsPerBatch - 1) / kTrialsPerBatch);
    auto trials_in = [&](std::uint64_t b) {
        return std::min<Count>(kTrialsPerBatch, N - static_cast<Count>(b) * kTrialsPerBatch);
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_batches)));
    std::vector<Partial> partials(workers);
    auto work = [&](unsigned w) {
        for (std::uint64_t b = w; b < n_batches; b += workers) {
            partials[w].add(sampler.run(b, trials_in(b)));
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back(work, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    Partial total;
    for (const auto &p : partials) {
        total.add(p);
    }

    EnsembleCounts c;
    c.N = N;
    c.m = total.m;
    if (std::holds_alternative<QuantumDriven>(model.kind)) {
        c.n_a = total.n_a;
        c.n_b = total.n_b;
        c.n_joint = synthesize_hidden_joint(c.n_a, c.n_b);
    } else {
        c.n_joint = total.n_joint;
        for (std::size_t i = 0; i < 2; ++i) {
            c.n_a[i] = c.n_joint[i][0] + c.n_joint[i][1];
            c.n_b[i] = c.n_joint[0][i] + c.n_joint[1][i];
        }
    }
    validate_counts(c);
    return c;
}

ConvergenceTable convergence_study(const ContextModel &model, std::span<const Count> schedule,
                                   std::span<const std::uint64_t> seeds, unsigned workers, double tol) {
    if (schedule.empty() || seeds.empty()) {
        throw Error(Errc::InvalidModel, "convergence_study: schedule and seeds must be nonempty");
    }
    for (std::size_t k = 1; k < schedule.size(); ++k) {
        if (schedule[k] <= schedule[k - 1]) {
            throw Error(Errc::InvalidModel, "convergence_study: schedule must be strictly increasing");
        }
    }
    ConvergenceTable table;
    for (Count n : schedule) {
        for (std::uint64_t seed : seeds) {
            ContextModel seeded = model;
            seeded.seed = seed;
            FrequencyReport r = frequency_report(simulate(seeded, n, workers, tol), tol);
            ConvergenceRow row;
            row.N = n;
            row.seed = seed;
            row.delta = r.delta;
            row.lambda = r.lambda;
            for (const auto &lam : r.lambda) {
                if (lam) {
                    row.kind = stronger(row.kind, classify_transformation(*lam, tol).kind);
                }
            }
            table.rows.push_back(row);
        }
    }

    const Count n_max = schedule.back();
    for (std::size_t i = 0; i < 2; ++i) {
        std::vector<double> lambdas;
        double delta_sum = 0.0;
        std::size_t rows_at_max = 0;
        for (const auto &row : table.rows) {
            if (row.N != n_max) {
                continue;
            }
            ++rows_at_max;
            delta_sum += row.delta[i];
            if (row.lambda[i]) {
                lambdas.push_back(*row.lambda[i]);
            }
        }
        LimitSummary &s = table.limit[i];
        s.delta_estimate = delta_sum / static_cast<double>(rows_at_max);
        if (!lambdas.empty()) {
            double mean = 0.0;
            for (double x : lambdas) {
                mean += x;
            }
            mean /= static_cast<double>(lambdas.size());
            double var = 0.0;
            for (double x : lambdas) {
                var += (x - mean) * (x - mean);
            }
            if (lambdas.size() > 1) {
                var /= static_cast<double>(lambdas.size() - 1);
            }
            s.lambda_estimate = mean;
            s.scaled_deviation = std::sqrt(static_cast<double>(n_max)) * std::sqrt(var);
            s.classification = classify_transformation(mean, tol);
        }
    }
    return table;
}

}  // namespace qprob
