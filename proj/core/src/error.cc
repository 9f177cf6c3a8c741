// Copyright 2026 The qctp Authors
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

#include "qctp/error.h"

namespace qctp {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::DuplicateLabel:
            return "DuplicateLabel";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::LabelCollision:
            return "LabelCollision";
        case ErrorCode::RegistryMismatch:
            return "RegistryMismatch";
        case ErrorCode::UnknownLabel:
            return "UnknownLabel";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::SameParticle:
            return "SameParticle";
        case ErrorCode::OutOfOrder:
            return "OutOfOrder";
        case ErrorCode::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::CapExceeded:
            return "CapExceeded";
        case ErrorCode::BranchCapExceeded:
            return "BranchCapExceeded";
        case ErrorCode::UnsupportedModel:
            return "UnsupportedModel";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

}  // namespace qctp
