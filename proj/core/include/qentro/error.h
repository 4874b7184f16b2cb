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

#ifndef QENTRO_ERROR_H
#define QENTRO_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qentro {

/// Every failure raised by the library carries one of these codes. The CLI maps
/// `Parse` to exit status 2 and everything else to exit status 3.
enum class ErrorCode {
    Parse,
    InvalidArgument,
    NonFinite,
    DimensionMismatch,
    NotHermitian,
    NoConvergence,
    NotUnitary,
    NotNormalized,
    NotADensityMatrix,
    WeightSumInvalid,
    IncompleteMeasurementSet,
    ZeroProbabilityBranch,
    InvalidDistribution,
    NotADensity,
    NonpositivePrecision,
    NegativeArea,
    NonpositiveN,
    InvalidTheta,
    ImpossibleOutcome,
    NonpositiveWavelength,
    BudgetExhausted,
    LengthMismatch,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace qentro

#endif
