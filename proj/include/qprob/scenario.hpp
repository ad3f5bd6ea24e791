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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qprob/frequency.hpp"
#include "qprob/io.hpp"
#include "qprob/measurement.hpp"
#include "qprob/state.hpp"

namespace qprob {

/// Largest Hilbert-space dimension a scenario file may declare.
inline constexpr std::size_t kMaxScenarioDim = 64;

/// One invariant evaluated on one scenario component.
struct CheckResult {
    std::string component; // e.g. "state", "channel 'A'", "povm 'M'"
    std::string check;     // e.g. "normalization", "psd[a1]"
    double gap = 0.0;
    bool ok = true;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    /// First failing check, if any.
    const CheckResult *first_failure() const;
    io::json to_json() const;
};

/// Checks every component of a scenario document without throwing on
/// invariant failures. Malformed documents (wrong shapes, missing keys) still
/// raise ParseError.
ValidationReport validate_scenario(const io::json &doc, double tol = kDefaultTol);

/// A loaded scenario document:
///
///   {"dim": 2,
///    "state": {"kind": "pure", "vec": [...]},
///    "channels": {"A": {"outcomes": [...], "kraus": [...]}, ...},
///    "povms": {"M": {"outcomes": [...], "elements": [...]}, ...},
///    "analysis": {"<subcommand>": {...}, ...}}
///
/// Every key except "dim" is optional.
struct Scenario {
    std::optional<std::size_t> dim;
    std::optional<DensityOperator> state;
    std::map<std::string, KrausChannel> channels;
    std::map<std::string, Povm> povms;
    io::json analysis = io::json::object();

    const DensityOperator &require_state() const;
    const KrausChannel &channel(const std::string &name) const;
    const Povm &povm(const std::string &name) const;
    /// analysis[subcommand], or an empty object.
    io::json analysis_for(const std::string &subcommand) const;
};

/// Validates, then builds. The first failing check becomes an
/// InvariantViolation naming the component and its gap.
Scenario load_scenario(const io::json &doc, double tol = kDefaultTol);

/// Reads and parses a JSON file (ParseError on I/O or syntax errors).
io::json read_json_file(const std::string &path);

/// Builds a context model from {"kind": "...", ...}. quantum_driven names its
/// channels with "first"/"second" (default "A"/"B") and uses the scenario state.
ContextModel model_from_json(const io::json &j, const Scenario &scenario, std::uint64_t seed,
                             double tol = kDefaultTol);

}  // namespace qprob
