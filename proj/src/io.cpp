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

#include "qprob/io.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qprob/error.hpp"

namespace qprob::io {
namespace {

[[noreturn]] void parse_fail(const std::string &what) { throw Error(Errc::ParseError, what); }

std::vector<std::string> labels_from_json(const json &j) {
    if (!j.is_array()) {
        parse_fail("outcomes must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto &l : j) {
        if (!l.is_string()) {
            parse_fail("outcome labels must be strings");
        }
        out.push_back(l.get<std::string>());
    }
    return out;
}

std::vector<Operator> operators_from_json(const json &j, const char *key) {
    if (!j.is_array()) {
        parse_fail(std::string("'") + key + "' must be an array of matrices");
    }
    std::vector<Operator> out;
    for (const auto &m : j) {
        out.push_back(operator_from_json(m));
    }
    return out;
}

const json &require_key(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        parse_fail(std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

json optional_number(const std::optional<double> &x) { return x ? json(*x) : json(nullptr); }

bool is_scalar_array(const json &j) {
    for (const auto &e : j) {
        if (e.is_structured()) {
            return false;
        }
    }
    return true;
}

void dump_into(const json &j, int indent, int depth, std::string &out) {
    switch (j.type()) {
        case json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            const bool inline_items = indent < 0 || is_scalar_array(j);
            out += '[';
            bool first = true;
            for (const auto &e : j) {
                if (!first) {
                    out += inline_items ? ", " : ",";
                }
                first = false;
                if (!inline_items) {
                    out += '\n';
                    out.append(static_cast<std::size_t>(indent * (depth + 1)), ' ');
                }
                dump_into(e, indent, depth + 1, out);
            }
            if (!inline_items) {
                out += '\n';
                out.append(static_cast<std::size_t>(indent * depth), ' ');
            }
            out += ']';
            return;
        }
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += indent < 0 ? ", " : ",";
                }
                first = false;
                if (indent >= 0) {
                    out += '\n';
                    out.append(static_cast<std::size_t>(indent * (depth + 1)), ' ');
                }
                out += json(it.key()).dump();
                out += ": ";
                dump_into(it.value(), indent, depth + 1, out);
            }
            if (indent >= 0) {
                out += '\n';
                out.append(static_cast<std::size_t>(indent * depth), ' ');
            }
            out += '}';
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string format_double(double x) {
    if (!std::isfinite(x)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string dump(const json &j, int indent) {
    std::string out;
    dump_into(j, indent, 0, out);
    return out;
}

Complex complex_from_json(const json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        parse_fail("complex number must be [re, im], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Vector vector_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        parse_fail("vector must be a nonempty array of [re, im]");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) {
        v(static_cast<Eigen::Index>(k)) = complex_from_json(j[k]);
    }
    return v;
}

json to_json(const Vector &v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out.push_back(to_json(v(k)));
    }
    return out;
}

Operator operator_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        parse_fail("matrix must be a nonempty array of rows");
    }
    const std::size_t n = j.size();
    Operator a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) {
            parse_fail("matrix must be square: row " + std::to_string(r) + " has the wrong length");
        }
        for (std::size_t c = 0; c < n; ++c) {
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
        }
    }
    return a;
}

json to_json(const Operator &a) {
    json out = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            row.push_back(to_json(a(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

DensityOperator state_from_json(const json &j, double tol) {
    const std::string kind = require_key(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
    if (kind == "pure") {
        return pure_to_density(PureState(vector_from_json(require_key(j, "vec")), tol));
    }
    if (kind == "density") {
        return DensityOperator(operator_from_json(require_key(j, "matrix")), tol);
    }
    parse_fail("state kind must be \"pure\" or \"density\"");
}

json to_json(const DensityOperator &rho) { return {{"kind", "density"}, {"matrix", to_json(rho.op())}}; }

json to_json(const PureState &psi) { return {{"kind", "pure"}, {"vec", to_json(psi.vec())}}; }

KrausChannel channel_from_json(const json &j, double tol) {
    return KrausChannel(OutcomeSet(labels_from_json(require_key(j, "outcomes"))),
                        operators_from_json(require_key(j, "kraus"), "kraus"), tol);
}

json to_json(const KrausChannel &ch) {
    json ops = json::array();
    for (const auto &v : ch.kraus_ops()) {
        ops.push_back(to_json(v));
    }
    return {{"outcomes", ch.outcomes().labels()}, {"kraus", std::move(ops)}};
}

Povm povm_from_json(const json &j, double tol) {
    return Povm(OutcomeSet(labels_from_json(require_key(j, "outcomes"))),
                operators_from_json(require_key(j, "elements"), "elements"), tol);
}

json to_json(const Povm &m) {
    json ops = json::array();
    for (const auto &e : m.elements()) {
        ops.push_back(to_json(e));
    }
    return {{"outcomes", m.outcomes().labels()}, {"elements", std::move(ops)}};
}

json to_json(const SequentialResult &r) {
    json joint = json::array();
    for (Eigen::Index i = 0; i < r.joint.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < r.joint.cols(); ++j) {
            row.push_back(r.joint(i, j));
        }
        joint.push_back(std::move(row));
    }
    return {{"first", r.first.labels()},
            {"second", r.second.labels()},
            {"joint", std::move(joint)},
            {"marginal_second", r.marginal_second},
            {"composed_povm", to_json(r.composed_povm)}};
}

json to_json(const BayesCheck &b) { return {{"lhs", b.lhs}, {"rhs", b.rhs}, {"max_gap", b.max_gap}}; }

json to_json(const Classification &c) {
    return {{"kind", std::string(to_string(c.kind))}, {"phase", c.phase}, {"sign", c.sign}};
}

json to_json(const LambdaReport &r) {
    json entries = json::array();
    for (const auto &e : r.entries) {
        json entry = {{"outcome", e.outcome},
                      {"direct", e.direct},
                      {"joint", e.joint},
                      {"reversed", e.reversed},
                      {"gamma", json::array({optional_number(e.gamma[0]), optional_number(e.gamma[1])})},
                      {"degenerate", e.degenerate},
                      {"lambda", optional_number(e.lambda)},
                      {"lambda_via_gamma", optional_number(e.lambda_via_gamma)}};
        entry["bounds"] = e.bounds ? json::array({e.bounds->lo, e.bounds->hi}) : json(nullptr);
        entry["classification"] = e.classification ? to_json(*e.classification) : json(nullptr);
        entries.push_back(std::move(entry));
    }
    return {{"outcomes", std::move(entries)}, {"max_commutator", r.max_commutator}};
}

json to_json(const SuperpositionDecomposition &d) {
    return {{"total", d.total},
            {"term1", d.term1},
            {"term2", d.term2},
            {"cross", d.cross},
            {"cos_theta", optional_number(d.cos_theta)}};
}

json to_json(const MixtureDecomposition &d) {
    return {{"total", d.total}, {"term1", d.term1}, {"term2", d.term2}};
}

json to_json(const EnsembleCounts &c) {
    return {{"N", c.N}, {"n_a", c.n_a}, {"n_b", c.n_b}, {"n_joint", c.n_joint}, {"m", c.m}};
}

json to_json(const FrequencyReport &r) {
    json p_trans = json::array();
    for (std::size_t i = 0; i < 2; ++i) {
        p_trans.push_back(r.p_trans_defined[i] ? json(r.p_trans[i]) : json(nullptr));
    }
    return {{"N", r.N},
            {"p", r.p},
            {"q", r.q},
            {"p_trans", std::move(p_trans)},
            {"delta", r.delta},
            {"lambda", json::array({optional_number(r.lambda[0]), optional_number(r.lambda[1])})},
            {"double_stochastic", {{"ok", r.double_stochastic.ok}, {"deviation", r.double_stochastic.deviation}}}};
}

}  // namespace qprob::io
