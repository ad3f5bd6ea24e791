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

#include "qprob/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "format.hpp"
#include "qprob/error.hpp"

namespace qprob {
namespace {

using io::json;

[[noreturn]] void parse_fail(const std::string &what) { throw Error(Errc::ParseError, what); }

void add(ValidationReport &r, std::string component, std::string check, double gap, double tol) {
    r.checks.push_back({std::move(component), std::move(check), gap, std::isfinite(gap) && gap <= tol});
}

std::vector<std::string> labels_of(const json &j, const std::string &component) {
    if (!j.is_object() || !j.contains("outcomes") || !j.at("outcomes").is_array()) {
        parse_fail(component + ": missing 'outcomes' array");
    }
    std::vector<std::string> out;
    for (const auto &l : j.at("outcomes")) {
        if (!l.is_string()) {
            parse_fail(component + ": outcome labels must be strings");
        }
        out.push_back(l.get<std::string>());
    }
    return out;
}

std::vector<Operator> ops_of(const json &j, const char *key, const std::string &component) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        parse_fail(component + ": missing '" + key + "' array");
    }
    std::vector<Operator> out;
    for (const auto &m : j.at(key)) {
        out.push_back(io::operator_from_json(m));
    }
    return out;
}

double psd_gap(const Operator &a) {
    Operator h = 0.5 * (a + a.adjoint());
    double lowest = hermitian_eigen(h, std::numeric_limits<double>::infinity()).values.minCoeff();
    return std::max(0.0, -lowest);
}

// Shared structural checks for a family of operators. Returns false when the
// dimensions are wrong, in which case the algebraic checks are skipped.
bool check_family(ValidationReport &r, const std::string &component, const std::vector<std::string> &labels,
                  const std::vector<Operator> &ops, std::size_t dim, double tol) {
    std::set<std::string> distinct(labels.begin(), labels.end());
    add(r, component, "distinct_labels", static_cast<double>(labels.size() - distinct.size()), tol);
    add(r, component, "nonempty", labels.empty() ? 1.0 : 0.0, tol);
    add(r, component, "outcome_count",
        std::abs(static_cast<double>(ops.size()) - static_cast<double>(labels.size())), tol);
    bool dims_ok = !ops.empty();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        double gap = std::abs(static_cast<double>(ops[k].rows()) - static_cast<double>(dim));
        if (gap > 0) {
            add(r, component, "dimension[" + std::to_string(k) + "]", gap, tol);
            dims_ok = false;
        }
    }
    return dims_ok;
}

std::string resolve_or(const json &j, const char *key, const char *fallback) {
    if (j.contains(key)) {
        if (!j.at(key).is_string()) {
            parse_fail(std::string("analysis key '") + key + "' must be a string");
        }
        return j.at(key).get<std::string>();
    }
    return fallback;
}

Eigen::Matrix2d matrix2_from_json(const json &j, const char *what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
        j[1].size() != 2) {
        parse_fail(std::string(what) + " must be a 2x2 array of numbers");
    }
    Eigen::Matrix2d m;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
            if (!j[i][k].is_number()) {
                parse_fail(std::string(what) + " entries must be numbers");
            }
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = j[i][k].get<double>();
        }
    }
    return m;
}

double distribution_gap(const Eigen::Matrix2d &p) {
    return std::max(std::abs(p.sum() - 1.0), std::max(0.0, -p.minCoeff()));
}

double kernel_gap(const Eigen::Matrix2d &k) {
    return std::max({std::abs(k.row(0).sum() - 1.0), std::abs(k.row(1).sum() - 1.0), std::max(0.0, -k.minCoeff())});
}

}  // namespace

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.ok; });
}

const CheckResult *ValidationReport::first_failure() const {
    for (const auto &c : checks) {
        if (!c.ok) {
            return &c;
        }
    }
    return nullptr;
}

json ValidationReport::to_json() const {
    json list = json::array();
    for (const auto &c : checks) {
        list.push_back({{"component", c.component}, {"check", c.check}, {"gap", c.gap}, {"ok", c.ok}});
    }
    return {{"ok", ok()}, {"checks", std::move(list)}};
}

ValidationReport validate_scenario(const json &doc, double tol) {
    if (!doc.is_object()) {
        parse_fail("scenario must be a JSON object");
    }
    ValidationReport r;
    const bool has_quantum = doc.contains("state") || doc.contains("channels") || doc.contains("povms");
    std::size_t dim = 0;
    if (doc.contains("dim")) {
        if (!doc.at("dim").is_number_integer() || doc.at("dim").get<long long>() < 1 ||
            doc.at("dim").get<long long>() > static_cast<long long>(kMaxScenarioDim)) {
            parse_fail("'dim' must be an integer in [1, " + std::to_string(kMaxScenarioDim) + "]");
        }
        dim = doc.at("dim").get<std::size_t>();
    } else if (has_quantum) {
        parse_fail("'dim' is required when the scenario has a state, channels or povms");
    }

    if (doc.contains("state")) {
        const json &s = doc.at("state");
        const std::string kind = s.is_object() && s.contains("kind") && s.at("kind").is_string()
                                     ? s.at("kind").get<std::string>()
                                     : "";
        if (kind == "pure") {
            if (!s.contains("vec")) {
                parse_fail("state: missing 'vec'");
            }
            Vector v = io::vector_from_json(s.at("vec"));
            double dgap = std::abs(static_cast<double>(v.size()) - static_cast<double>(dim));
            add(r, "state", "dimension", dgap, tol);
            add(r, "state", "unit_norm", std::abs(v.norm() - 1.0), tol);
        } else if (kind == "density") {
            if (!s.contains("matrix")) {
                parse_fail("state: missing 'matrix'");
            }
            Operator a = io::operator_from_json(s.at("matrix"));
            double dgap = std::abs(static_cast<double>(a.rows()) - static_cast<double>(dim));
            add(r, "state", "dimension", dgap, tol);
            add(r, "state", "hermitian", hermitian_gap(a), tol);
            add(r, "state", "psd", psd_gap(a), tol);
            add(r, "state", "unit_trace", std::abs(a.trace() - Complex(1.0)), tol);
        } else {
            parse_fail("state kind must be \"pure\" or \"density\"");
        }
    }

    if (doc.contains("channels")) {
        if (!doc.at("channels").is_object()) {
            parse_fail("'channels' must be an object keyed by name");
        }
        for (const auto &[name, ch] : doc.at("channels").items()) {
            const std::string component = "channel '" + name + "'";
            auto labels = labels_of(ch, component);
            auto ops = ops_of(ch, "kraus", component);
            if (check_family(r, component, labels, ops, dim, tol)) {
                add(r, component, "normalization", completeness_gap(ops), tol);
            }
        }
    }

    if (doc.contains("povms")) {
        if (!doc.at("povms").is_object()) {
            parse_fail("'povms' must be an object keyed by name");
        }
        for (const auto &[name, m] : doc.at("povms").items()) {
            const std::string component = "povm '" + name + "'";
            auto labels = labels_of(m, component);
            auto ops = ops_of(m, "elements", component);
            if (check_family(r, component, labels, ops, dim, tol)) {
                for (std::size_t k = 0; k < ops.size(); ++k) {
                    const std::string label = k < labels.size() ? labels[k] : std::to_string(k);
                    add(r, component, "hermitian[" + label + "]", hermitian_gap(ops[k]), tol);
                    add(r, component, "psd[" + label + "]", psd_gap(ops[k]), tol);
                }
                add(r, component, "normalization", normalization_gap(ops), tol);
            }
        }
    }

    if (doc.contains("analysis")) {
        const json &analysis = doc.at("analysis");
        if (!analysis.is_object()) {
            parse_fail("'analysis' must be an object keyed by subcommand");
        }
        auto has = [&](const char *group, const std::string &name) {
            return doc.contains(group) && doc.at(group).contains(name);
        };
        for (const auto &[sub, params] : analysis.items()) {
            const std::string component = "analysis '" + sub + "'";
            if (!params.is_object()) {
                parse_fail(component + " must be an object");
            }
            for (const char *key : {"first", "second", "channel"}) {
                if (params.contains(key)) {
                    const std::string name = resolve_or(params, key, "");
                    add(r, component, std::string("reference[") + name + "]", has("channels", name) ? 0.0 : 1.0,
                        tol);
                }
            }
            if (params.contains("povm")) {
                const std::string name = resolve_or(params, "povm", "");
                add(r, component, "reference[" + name + "]", has("povms", name) ? 0.0 : 1.0, tol);
            }
            if (params.contains("model")) {
                const json &model = params.at("model");
                const std::string kind = resolve_or(model, "kind", "");
                if (kind == "classical_independent" || kind == "classical_perturbed") {
                    if (!model.contains("joint")) {
                        parse_fail(component + ": model needs 'joint'");
                    }
                    add(r, component, "joint_distribution", distribution_gap(matrix2_from_json(model.at("joint"), "joint")),
                        tol);
                    if (kind == "classical_perturbed") {
                        if (!model.contains("kernels") || !model.at("kernels").is_array() ||
                            model.at("kernels").size() != 2) {
                            parse_fail(component + ": classical_perturbed needs two 'kernels'");
                        }
                        for (std::size_t k = 0; k < 2; ++k) {
                            add(r, component, "kernel[" + std::to_string(k + 1) + "]",
                                kernel_gap(matrix2_from_json(model.at("kernels")[k], "kernel")), tol);
                        }
                    }
                } else if (kind == "quantum_driven") {
                    for (const auto &[key, fallback] : {std::pair{"first", "A"}, std::pair{"second", "B"}}) {
                        const std::string name = resolve_or(model, key, fallback);
                        add(r, component, "reference[" + name + "]", has("channels", name) ? 0.0 : 1.0, tol);
                    }
                    add(r, component, "state_present", doc.contains("state") ? 0.0 : 1.0, tol);
                } else {
                    parse_fail(component + ": unknown model kind '" + kind + "'");
                }
            }
        }
    }
    return r;
}

const DensityOperator &Scenario::require_state() const {
    if (!state) {
        throw Error(Errc::ParseError, "scenario has no 'state'");
    }
    return *state;
}

const KrausChannel &Scenario::channel(const std::string &name) const {
    auto it = channels.find(name);
    if (it == channels.end()) {
        throw Error(Errc::ParseError, "scenario has no channel '" + name + "'");
    }
    return it->second;
}

const Povm &Scenario::povm(const std::string &name) const {
    auto it = povms.find(name);
    if (it == povms.end()) {
        throw Error(Errc::ParseError, "scenario has no povm '" + name + "'");
    }
    return it->second;
}

json Scenario::analysis_for(const std::string &subcommand) const {
    if (analysis.contains(subcommand)) {
        return analysis.at(subcommand);
    }
    return json::object();
}

Scenario load_scenario(const json &doc, double tol) {
    ValidationReport report = validate_scenario(doc, tol);
    if (const CheckResult *bad = report.first_failure()) {
        throw Error(Errc::InvariantViolation,
                    bad->component + ": " + bad->check + " check failed, gap " + detail::num(bad->gap));
    }
    Scenario s;
    if (doc.contains("dim")) {
        s.dim = doc.at("dim").get<std::size_t>();
    }
    if (doc.contains("state")) {
        s.state = io::state_from_json(doc.at("state"), tol);
    }
    if (doc.contains("channels")) {
        for (const auto &[name, ch] : doc.at("channels").items()) {
            s.channels.emplace(name, io::channel_from_json(ch, tol));
        }
    }
    if (doc.contains("povms")) {
        for (const auto &[name, m] : doc.at("povms").items()) {
            s.povms.emplace(name, io::povm_from_json(m, tol));
        }
    }
    if (doc.contains("analysis")) {
        s.analysis = doc.at("analysis");
    }
    return s;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::ParseError, "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error &e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

ContextModel model_from_json(const json &j, const Scenario &scenario, std::uint64_t seed, double tol) {
    const std::string kind = resolve_or(j, "kind", "");
    ContextModel model{ClassicalIndependent{Eigen::Matrix2d::Zero()}, seed};
    if ((kind == "classical_independent" || kind == "classical_perturbed") && !j.contains("joint")) {
        parse_fail(kind + " needs 'joint'");
    }
    if (kind == "classical_independent") {
        model.kind = ClassicalIndependent{matrix2_from_json(j.at("joint"), "joint")};
    } else if (kind == "classical_perturbed") {
        if (!j.contains("kernels") || !j.at("kernels").is_array() || j.at("kernels").size() != 2) {
            parse_fail("classical_perturbed needs two 'kernels'");
        }
        model.kind = ClassicalPerturbed{matrix2_from_json(j.at("joint"), "joint"),
                                        {matrix2_from_json(j.at("kernels")[0], "kernel"),
                                         matrix2_from_json(j.at("kernels")[1], "kernel")}};
    } else if (kind == "quantum_driven") {
        model.kind = QuantumDriven{scenario.require_state(), scenario.channel(resolve_or(j, "first", "A")),
                                   scenario.channel(resolve_or(j, "second", "B"))};
    } else {
        parse_fail("unknown model kind '" + kind + "'");
    }
    validate_model(model, tol);
    return model;
}

}  // namespace qprob
