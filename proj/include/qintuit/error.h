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

#ifndef QINTUIT_ERROR_H
#define QINTUIT_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qintuit {

enum class ErrorCode {
    NormViolation,
    DimensionMismatch,
    DuplicateLabel,
    IndexOutOfRange,
    ZeroProbability,
    InfeasibleDenominator,
    SyntaxError,
    UnknownAtom,
    UnknownWorld,
    InvalidModel,
    NotMaximalWorld,
    EmptySampleSpace,
    WeightMismatch,
    SpaceMismatch,
    NonOrthonormalBasis,
    NonBooleanValue,
    InvalidConfig,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a stable exit status.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Parse failures also carry the 1-based column of the offending token.
class SyntaxError : public Error {
   public:
    SyntaxError(size_t column, const std::string &message);

    size_t column() const noexcept {
        return column_;
    }

   private:
    size_t column_;
};

}  // namespace qintuit

#endif
