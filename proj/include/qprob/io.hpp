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

#include <json.hpp>

#include "qprob/frequency.hpp"
#include "qprob/interference.hpp"
#include "qprob/measurement.hpp"
#include "qprob/sequential.hpp"
#include "qprob/state.hpp"

namespace qprob::io {

using json = nlohmann::ordered_json;

// Wire format: a complex number is [re, im]; an operator is a row-major
// nested array of complex numbers. A bare JSON number is accepted as a real
// complex number on input. Shape errors raise Errc::ParseError.

Complex complex_from_json(const json &j);
json to_json(Complex z);

Vector vector_from_json(const json &j);
json to_json(const Vector &v);

Operator operator_from_json(const json &j);
json to_json(const Operator &a);

/// {"kind":"pure","vec":[...]} or {"kind":"density","matrix":[...]}.
DensityOperator state_from_json(const json &j, double tol = kDefaultTol);
json to_json(const DensityOperator &rho);
json to_json(const PureState &psi);

/// {"outcomes":[...],"kraus":[matrix, ...]}
KrausChannel channel_from_json(const json &j, double tol = kDefaultTol);
json to_json(const KrausChannel &ch);

/// {"outcomes":[...],"elements":[matrix, ...]}
Povm povm_from_json(const json &j, double tol = kDefaultTol);
json to_json(const Povm &m);

json to_json(const SequentialResult &r);
json to_json(const BayesCheck &b);
json to_json(const Classification &c);
json to_json(const LambdaReport &r);
json to_json(const SuperpositionDecomposition &d);
json to_json(const MixtureDecomposition &d);
json to_json(const EnsembleCounts &c);
json to_json(const FrequencyReport &r);

/// Serializes with every floating-point value printed to 17 significant digits.
/// indent < 0 writes a single line.
std::string dump(const json &j, int indent = 2);

/// Formats one double the way `dump` does.
std::string format_double(double x);

}  // namespace qprob::io
