// Copyright 2026 The qintuit Authors
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

#include "qintuit/error.h"

using namespace qintuit;

std::string_view qintuit::error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NormViolation:
            return "NormViolation";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::DuplicateLabel:
            return "DuplicateLabel";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::ZeroProbability:
            return "ZeroProbability";
        case ErrorCode::InfeasibleDenominator:
            return "InfeasibleDenominator";
        case ErrorCode::SyntaxError:
            return "SyntaxError";
        case ErrorCode::UnknownAtom:
            return "UnknownAtom";
        case ErrorCode::UnknownWorld:
            return "UnknownWorld";
        case ErrorCode::InvalidModel:
            return "InvalidModel";
        case ErrorCode::NotMaximalWorld:
            return "NotMaximalWorld";
        case ErrorCode::EmptySampleSpace:
            return "EmptySampleSpace";
        case ErrorCode::WeightMismatch:
            return "WeightMismatch";
        case ErrorCode::SpaceMismatch:
            return "SpaceMismatch";
        case ErrorCode::NonOrthonormalBasis:
            return "NonOrthonormalBasis";
        case ErrorCode::NonBooleanValue:
            return "NonBooleanValue";
        case ErrorCode::InvalidConfig:
            return "InvalidConfig";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

SyntaxError::SyntaxError(size_t column, const std::string &message)
    : Error(ErrorCode::SyntaxError, "column " + std::to_string(column) + ": " + message), column_(column) {
}
