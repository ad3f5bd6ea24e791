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
#include <limits>
#include <string>

#include "gtest/gtest.h"

#include "qprob/error.hpp"
#include "qprob/random.hpp"
#include "qprob/scenario.hpp"

using namespace qprob;
using qprob::io::json;

namespace {

Errc code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no qprob::Error thrown";
    return Errc::ParseError;
}

std::string fixture(const std::string &name) { return std::string(QPROB_SCENARIO_DIR) + "/" + name; }

}  // namespace

TEST(FormatDouble, examples) {
    EXPECT_EQ(io::format_double(1.0), "1.0");
    EXPECT_EQ(io::format_double(-3.0), "-3.0");
    EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(io::format_double(1e300), "1.0000000000000001e+300");
    EXPECT_EQ(io::format_double(std::numeric_limits<double>::quiet_NaN()), "null");
}

TEST(FormatDouble, round_trips_exactly) {
    Rng rng(59);
    std::uniform_real_distribution<double> unif(-1e6, 1e6);
    for (int trial = 0; trial < 5000; ++trial) {
        double x = unif(rng) * std::pow(10.0, trial % 30 - 15);
        EXPECT_EQ(std::stod(io::format_double(x)), x);
    }
}

TEST(Dump, inlines_scalar_arrays_and_reparses) {
    json j = {{"a", json::array({1.0, 2.5})}, {"b", {{"c", nullptr}}}, {"e", json::array()}};
    std::string s = io::dump(j);
    EXPECT_NE(s.find("\"a\": [1.0, 2.5]"), std::string::npos);
    EXPECT_NE(s.find("\"e\": []"), std::string::npos);
    EXPECT_EQ(json::parse(s), j);
}

TEST(OperatorJson, round_trip) {
    Rng rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t dim = 1 + static_cast<std::size_t>(trial % 5);
        Operator a = random_ginibre(dim, dim, rng);
        Operator back = io::operator_from_json(json::parse(io::dump(io::to_json(a))));
        EXPECT_EQ(back, a);
    }
}

TEST(ChannelJson, round_trip) {
    Rng rng(67);
    auto ch = random_kraus_channel(3, 3, rng, "k");
    auto back = io::channel_from_json(json::parse(io::dump(io::to_json(ch))));
    EXPECT_EQ(back.outcomes().labels(), ch.outcomes().labels());
    for (std::size_t k = 0; k < ch.size(); ++k) {
        EXPECT_EQ(back.op(k), ch.op(k));
    }
    auto m = povm_from_channel(ch);
    auto m_back = io::povm_from_json(json::parse(io::dump(io::to_json(m))));
    EXPECT_EQ(m_back.element(2), m.element(2));
}

TEST(StateJson, pure_and_density) {
    auto rho = io::state_from_json(json::parse(R"({"kind": "pure", "vec": [[0.6, 0], [0, 0.8]]})"));
    EXPECT_NEAR(rho.op()(1, 1).real(), 0.64, 1e-15);
    EXPECT_NEAR(rho.op()(0, 1).imag(), -0.48, 1e-15);
    auto back = io::state_from_json(io::to_json(rho));
    EXPECT_EQ(back.op(), rho.op());
    auto real_entries = io::state_from_json(json::parse(R"({"kind": "density", "matrix": [[0.5, 0], [0, 0.5]]})"));
    EXPECT_EQ(real_entries.op(), DensityOperator::maximally_mixed(2).op());
}

TEST(ParseErrors, malformed_shapes) {
    EXPECT_EQ(code_of([] { io::complex_from_json(json::parse("[1, 2, 3]")); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { io::complex_from_json(json::parse("\"x\"")); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { io::operator_from_json(json::parse("[[1, 0], [0]]")); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { io::operator_from_json(json::parse("[]")); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { io::state_from_json(json::parse(R"({"kind": "mixed"})")); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { io::state_from_json(json::parse(R"({"kind": "pure"})")); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { io::channel_from_json(json::parse(R"({"outcomes": [1], "kraus": []})")); }),
              Errc::ParseError);
}

TEST(ParseErrors, invalid_content_keeps_its_own_code) {
    EXPECT_EQ(code_of([] { io::state_from_json(json::parse(R"({"kind": "pure", "vec": [1, 1]})")); }),
              Errc::NotUnit);
    EXPECT_EQ(code_of([] {
                  io::povm_from_json(json::parse(R"({"outcomes": ["a"], "elements": [[[0.9, 0], [0, 0.9]]]})"));
              }),
              Errc::NotNormalized);
}

TEST(LambdaReportJson, has_expected_keys) {
    auto doc = read_json_file(fixture("hyperbolic.json"));
    auto sc = load_scenario(doc);
    auto report = lambda_report(sc.require_state(), sc.channel("A"), sc.channel("B"));
    json j = json::parse(io::dump(io::to_json(report)));
    ASSERT_EQ(j["outcomes"].size(), 2u);
    const auto &e = j["outcomes"][0];
    for (const char *key : {"outcome", "direct", "joint", "reversed", "gamma", "degenerate", "lambda",
                            "lambda_via_gamma", "bounds", "classification"}) {
        EXPECT_TRUE(e.contains(key)) << key;
    }
    EXPECT_EQ(e["classification"]["kind"], "hyperbolic");
    EXPECT_NEAR(e["lambda"].get<double>(), 3.0, 1e-12);
}

TEST(FrequencyReportJson, undefined_values_are_null) {
    EnsembleCounts c;
    c.N = 10;
    c.n_a = {0, 10};
    c.n_b = {4, 6};
    c.n_joint = {{{0, 0}, {4, 6}}};
    c.m = {{{0, 0}, {5, 5}}};
    json j = io::to_json(frequency_report(c));
    EXPECT_TRUE(j["p_trans"][0].is_null());
    EXPECT_TRUE(j["lambda"][0].is_null());
    EXPECT_EQ(j["N"], 10);
}
