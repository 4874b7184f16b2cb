// Copyright 2026 The Qentro Authors
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

#include "qentro/error.h"

namespace qentro {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse:
            return "Parse";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::NonFinite:
            return "NonFinite";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::NoConvergence:
            return "NoConvergence";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::NotADensityMatrix:
            return "NotADensityMatrix";
        case ErrorCode::WeightSumInvalid:
            return "WeightSumInvalid";
        case ErrorCode::IncompleteMeasurementSet:
            return "IncompleteMeasurementSet";
        case ErrorCode::ZeroProbabilityBranch:
            return "ZeroProbabilityBranch";
        case ErrorCode::InvalidDistribution:
            return "InvalidDistribution";
        case ErrorCode::NotADensity:
            return "NotADensity";
        case ErrorCode::NonpositivePrecision:
            return "NonpositivePrecision";
        case ErrorCode::NegativeArea:
            return "NegativeArea";
        case ErrorCode::NonpositiveN:
            return "NonpositiveN";
        case ErrorCode::InvalidTheta:
            return "InvalidTheta";
        case ErrorCode::ImpossibleOutcome:
            return "ImpossibleOutcome";
        case ErrorCode::NonpositiveWavelength:
            return "NonpositiveWavelength";
        case ErrorCode::BudgetExhausted:
            return "BudgetExhausted";
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace qentro
