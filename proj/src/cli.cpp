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

#include "qprob/cli.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qprob/error.hpp"
#include "qprob/frequency.hpp"
#include "qprob/interference.hpp"
#include "qprob/io.hpp"
#include "qprob/scenario.hpp"
#include "qprob/sequential.hpp"

namespace qprob::cli {
namespace {

using io::json;

struct GlobalFlags {
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    Count trials = 10000;
};

struct Args {
    std::string scenario_path;
    std::string povm;
    std::string channel;
    std::vector<std::string> subset;
    std::string first;
    std::string second;
    std::string schedule;
    std::size_t seeds = 1;
    unsigned workers = 1;
    std::optional<double> lambda;
};

[[noreturn]] void usage_fail(const std::string &what) { throw Error(Errc::ParseError, what); }

std::string pick(const std::string &flag, const json &params, const char *key, const std::string &fallback) {
    if (!flag.empty()) {
        return flag;
    }
    if (params.contains(key) && params.at(key).is_string()) {
        return params.at(key).get<std::string>();
    }
    return fallback;
}

std::vector<std::string> subset_from(const Args &args, const json &params) {
    if (!args.subset.empty()) {
        return args.subset;
    }
    std::vector<std::string> out;
    if (params.contains("subset")) {
        if (!params.at("subset").is_array()) {
            usage_fail("'subset' must be an array of labels");
        }
        for (const auto &l : params.at("subset")) {
            out.push_back(l.get<std::string>());
        }
    }
    return out;
}

Count parse_count(const std::string &text) {
    double value = 0.0;
    try {
        std::size_t used = 0;
        value = std::stod(text, &used);
        if (used != text.size()) {
            usage_fail("bad schedule entry '" + text + "'");
        }
    } catch (const std::logic_error &) {
        usage_fail("bad schedule entry '" + text + "'");
    }
    if (!(value >= 1.0) || value != std::floor(value) || value > 1e12) {
        usage_fail("schedule entries must be positive integers, got '" + text + "'");
    }
    return static_cast<Count>(value);
}

std::vector<Count> schedule_from(const Args &args, const json &params, const GlobalFlags &g) {
    std::vector<Count> out;
    if (!args.schedule.empty()) {
        std::stringstream ss(args.schedule);
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(parse_count(item));
        }
    } else if (params.contains("schedule")) {
        for (const auto &n : params.at("schedule")) {
            if (!n.is_number()) {
                usage_fail("'schedule' entries must be numbers");
            }
            out.push_back(parse_count(io::format_double(n.get<double>())));
        }
    } else {
        out.push_back(g.trials);
    }
    return out;
}

Scenario load(const Args &args, const GlobalFlags &g) { return load_scenario(read_json_file(args.scenario_path), g.tol); }

int cmd_validate(const Args &args, const GlobalFlags &g, std::ostream &out, std::ostream &err) {
    ValidationReport report = validate_scenario(read_json_file(args.scenario_path), g.tol);
    out << io::dump(report.to_json()) << '\n';
    if (const CheckResult *bad = report.first_failure()) {
        err << "InvariantViolation: " << bad->component << ": " << bad->check << " gap "
            << io::format_double(bad->gap) << '\n';
        return kInvariantViolation;
    }
    return kOk;
}

int cmd_probs(const Args &args, const GlobalFlags &g, std::ostream &out) {
    const Scenario s = load(args, g);
    const json params = s.analysis_for("probs");
    // An explicit flag for one kind of measurement overrides the scenario's choice of either.
    const bool flagged = !args.povm.empty() || !args.channel.empty();
    std::string povm_name = flagged ? args.povm : pick("", params, "povm", "");
    std::string channel_name = flagged ? args.channel : pick("", params, "channel", "");
    if (povm_name.empty() && channel_name.empty()) {
        if (s.povms.size() == 1) {
            povm_name = s.povms.begin()->first;
        } else {
            usage_fail("probs: name a measurement with --povm or --channel");
        }
    }
    const Povm m = povm_name.empty() ? povm_from_channel(s.channel(channel_name), g.tol) : s.povm(povm_name);
    const auto &rho = s.require_state();

    json result = {{"measurement", povm_name.empty() ? channel_name : povm_name}};
    json outcomes = json::array();
    auto probs = outcome_probabilities(rho, m, g.tol);
    for (std::size_t i = 0; i < m.size(); ++i) {
        outcomes.push_back({{"label", m.outcomes()[i]}, {"probability", probs[i]}});
    }
    result["outcomes"] = std::move(outcomes);
    const auto subset = subset_from(args, flagged ? json::object() : params);
    if (!subset.empty()) {
        result["subset"] = {{"labels", subset}, {"probability", probability(rho, m, subset, g.tol)}};
    }
    out << io::dump(result) << '\n';
    return kOk;
}

int cmd_sequential(const Args &args, const GlobalFlags &g, std::ostream &out) {
    const Scenario s = load(args, g);
    const json params = s.analysis_for("sequential");
    const auto &first = s.channel(pick(args.first, params, "first", "A"));
    const auto &second = s.channel(pick(args.second, params, "second", "B"));
    const auto &rho = s.require_state();
    const SequentialResult seq = sequential_joint(rho, first, second, g.tol);
    const BayesCheck bayes = quantum_bayes_check(rho, first, second, g.tol);
    json seq_json = io::to_json(seq);
    json result = {{"first", seq_json["first"]},
                   {"second", seq_json["second"]},
                   {"joint", seq_json["joint"]},
                   {"marginal_second", seq.marginal_second},
                   {"bayes_gap", bayes.max_gap}};
    out << io::dump(result) << '\n';
    return kOk;
}

int cmd_lambda(const Args &args, const GlobalFlags &g, std::ostream &out) {
    const Scenario s = load(args, g);
    const json params = s.analysis_for("lambda");
    const std::string first_name = pick(args.first, params, "first", "A");
    const std::string second_name = pick(args.second, params, "second", "B");
    const LambdaReport report = lambda_report(s.require_state(), s.channel(first_name), s.channel(second_name), g.tol);
    json result = {{"first", first_name}, {"second", second_name}, {"tol", g.tol}};
    json body = io::to_json(report);
    result["outcomes"] = body["outcomes"];
    result["max_commutator"] = body["max_commutator"];
    out << io::dump(result) << '\n';
    return kOk;
}

int cmd_superpose(const Args &args, const GlobalFlags &g, std::ostream &out) {
    const Scenario s = load(args, g);
    const json params = s.analysis_for("superpose");
    for (const char *key : {"phi1", "phi2", "alpha", "beta"}) {
        if (!params.contains(key)) {
            usage_fail(std::string("superpose: analysis needs '") + key + "'");
        }
    }
    const PureState phi1(io::vector_from_json(params.at("phi1")), g.tol);
    const PureState phi2(io::vector_from_json(params.at("phi2")), g.tol);
    const Complex alpha = io::complex_from_json(params.at("alpha"));
    const Complex beta = io::complex_from_json(params.at("beta"));
    std::string povm_name = pick(args.povm, params, "povm", "");
    std::optional<Povm> filter;
    if (povm_name.empty() || povm_name == "filter") {
        filter = filter_povm(phi1, phi2, g.tol);
        povm_name = "filter";
    }
    const Povm &m = filter ? *filter : s.povm(povm_name);
    auto subset = subset_from(args, params);
    if (subset.empty()) {
        subset.push_back(m.outcomes()[0]);
    }
    const SuperpositionDecomposition d = superposition_rule(phi1, phi2, alpha, beta, m, subset, g.tol);
    json result = {{"povm", povm_name}, {"subset", subset}};
    const json body = io::to_json(d);
    for (const auto &[k, v] : body.items()) {
        result[k] = v;
    }
    out << io::dump(result) << '\n';
    return kOk;
}

std::string csv_value(const std::optional<double> &x) { return x ? io::format_double(*x) : "nan"; }

int cmd_freq_sim(const Args &args, const GlobalFlags &g, std::ostream &out, std::ostream &err) {
    const Scenario s = load(args, g);
    const json params = s.analysis_for("freq-sim");
    if (!params.contains("model")) {
        usage_fail("freq-sim: scenario analysis 'freq-sim' needs a 'model'");
    }
    const ContextModel model = model_from_json(params.at("model"), s, g.seed, g.tol);
    const auto schedule = schedule_from(args, params, g);
    if (args.seeds < 1) {
        usage_fail("--seeds must be at least 1");
    }
    std::vector<std::uint64_t> seeds;
    for (std::size_t k = 0; k < args.seeds; ++k) {
        seeds.push_back(g.seed + k);
    }
    if (std::holds_alternative<QuantumDriven>(model.kind)) {
        err << "note: hidden joint counts n_ij are synthesized bookkeeping for quantum_driven runs\n";
    }
    const ConvergenceTable table = convergence_study(model, schedule, seeds, args.workers, g.tol);
    out << "N,seed,delta1,delta2,lambda1,lambda2,class\n";
    for (const auto &row : table.rows) {
        out << row.N << ',' << row.seed << ',' << io::format_double(row.delta[0]) << ','
            << io::format_double(row.delta[1]) << ',' << csv_value(row.lambda[0]) << ',' << csv_value(row.lambda[1])
            << ',' << to_string(row.kind) << '\n';
    }
    return kOk;
}

int cmd_classify(const Args &args, const GlobalFlags &g, std::ostream &out) {
    std::optional<double> lambda = args.lambda;
    if (!lambda && !args.scenario_path.empty()) {
        const Scenario s = load(args, g);
        const json params = s.analysis_for("classify");
        if (params.contains("lambda") && params.at("lambda").is_number()) {
            lambda = params.at("lambda").get<double>();
        }
    }
    if (!lambda || !std::isfinite(*lambda)) {
        usage_fail("classify: pass a finite --lambda or a scenario with analysis.classify.lambda");
    }
    json result = {{"lambda", *lambda}, {"tol", g.tol}};
    const json body = io::to_json(classify_transformation(*lambda, g.tol));
    for (const auto &[k, v] : body.items()) {
        result[k] = v;
    }
    out << io::dump(result) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Generalized-measurement probability calculus and context-transition simulation"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalFlags g;
    Args a;
    app.add_option("--tol", g.tol, "Structural and classification tolerance")->capture_default_str();
    app.add_option("--seed", g.seed, "Master RNG seed")->capture_default_str();
    app.add_option("--trials", g.trials, "Ensemble size when no schedule is given")->capture_default_str();

    auto *validate = app.add_subcommand("validate", "Check every scenario component's invariants");
    auto *probs = app.add_subcommand("probs", "Outcome probabilities tr{rho M(E)}");
    auto *sequential = app.add_subcommand("sequential", "Joint statistics of first-then-second and the Bayes check");
    auto *lambda = app.add_subcommand("lambda", "Interference coefficients and their admissible ranges");
    auto *superpose = app.add_subcommand("superpose", "Superposition rule decomposition");
    auto *freq = app.add_subcommand("freq-sim", "Frequency simulation of context transitions (CSV)");
    auto *classify = app.add_subcommand("classify", "Classify a coefficient as classical/trigonometric/hyperbolic");

    for (auto *sub : {validate, probs, sequential, lambda, superpose, freq}) {
        sub->add_option("scenario", a.scenario_path, "Scenario JSON file")->required();
    }
    classify->add_option("scenario", a.scenario_path, "Scenario JSON file");
    classify->add_option("--lambda", a.lambda, "Coefficient to classify");
    probs->add_option("--povm", a.povm, "POVM name");
    probs->add_option("--channel", a.channel, "Channel name (its induced POVM)");
    probs->add_option("--subset", a.subset, "Outcome labels forming the event");
    superpose->add_option("--povm", a.povm, "POVM name, or 'filter'");
    superpose->add_option("--subset", a.subset, "Outcome labels forming the event");
    for (auto *sub : {sequential, lambda}) {
        sub->add_option("--first", a.first, "First channel name (default A)");
        sub->add_option("--second", a.second, "Second channel name (default B)");
    }
    freq->add_option("--schedule", a.schedule, "Comma-separated ensemble sizes, e.g. 1e3,1e4,1e5");
    freq->add_option("--seeds", a.seeds, "Number of seeds, starting at --seed")->capture_default_str();
    freq->add_option("--workers", a.workers, "Worker threads per simulation")->capture_default_str();

    std::vector<std::string> argv_store{"qprob"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &s : argv_store) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageOrParse;
    }

    try {
        if (*validate) return cmd_validate(a, g, out, err);
        if (*probs) return cmd_probs(a, g, out);
        if (*sequential) return cmd_sequential(a, g, out);
        if (*lambda) return cmd_lambda(a, g, out);
        if (*superpose) return cmd_superpose(a, g, out);
        if (*freq) return cmd_freq_sim(a, g, out, err);
        if (*classify) return cmd_classify(a, g, out);
    } catch (const Error &e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        switch (e.code()) {
            case Errc::ParseError: return kUsageOrParse;
            case Errc::InvariantViolation: return kInvariantViolation;
            default: return kComputation;
        }
    } catch (const json::exception &e) {
        err << "error: ParseError: " << e.what() << '\n';
        return kUsageOrParse;
    }
    return kUsageOrParse;
}

}  // namespace qprob::cli
