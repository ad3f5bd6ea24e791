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

#include "qprob/error.hpp"

namespace qprob {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::NotSquare: return "NotSquare";
        case Errc::NonFinite: return "NonFinite";
        case Errc::NotHermitian: return "NotHermitian";
        case Errc::NotPsd: return "NotPsd";
        case Errc::NotUnit: return "NotUnit";
        case Errc::NotOrthogonal: return "NotOrthogonal";
        case Errc::BadWeights: return "BadWeights";
        case Errc::DimMismatch: return "DimMismatch";
        case Errc::EmptyOutcomes: return "EmptyOutcomes";
        case Errc::DuplicateLabel: return "DuplicateLabel";
        case Errc::UnknownLabel: return "UnknownLabel";
        case Errc::NotNormalized: return "NotNormalized";
        case Errc::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
        case Errc::DegenerateJoint: return "DegenerateJoint";
        case Errc::DegenerateOverlap: return "DegenerateOverlap";
        case Errc::InfeasibleCounts: return "InfeasibleCounts";
        case Errc::DegenerateLambda: return "DegenerateLambda";
        case Errc::InvalidModel: return "InvalidModel";
        case Errc::ParseError: return "ParseError";
        case Errc::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

}  // namespace qprob
