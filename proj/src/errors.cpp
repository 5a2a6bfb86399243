// Copyright 2026 The concroc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "concroc/errors.hpp"

namespace concroc {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::DegenerateSample: return "DegenerateSample";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::MaxIterExceeded: return "MaxIterExceeded";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::MismatchedInputs: return "MismatchedInputs";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::ResampleDegenerate: return "ResampleDegenerate";
        case ErrorCode::InvalidParam: return "InvalidParam";
        case ErrorCode::InputFormat: return "InputFormat";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_numerical(ErrorCode code) {
    return code == ErrorCode::MaxIterExceeded || code == ErrorCode::ResampleDegenerate;
}

}  // namespace concroc
