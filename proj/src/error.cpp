// Copyright 2026 The Authors.
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

#include "plabic/error.hpp"

namespace plabic {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kNecklaceInvalid: return "necklace-invalid";
    case ErrorCode::kPreconditionViolated: return "precondition-violated";
    case ErrorCode::kDegenerateCurve: return "degenerate-curve";
    case ErrorCode::kNotWeaklySeparated: return "not-weakly-separated";
    case ErrorCode::kEmbeddingViolation: return "embedding-violation";
    case ErrorCode::kNotASubset: return "not-a-subset";
    case ErrorCode::kReferenceNotMaximal: return "reference-not-maximal";
    case ErrorCode::kSquareNotApplicable: return "square-not-applicable";
    case ErrorCode::kInputNotInPositroid: return "input-not-in-positroid";
    case ErrorCode::kFrozenInvalid: return "frozen-invalid";
    case ErrorCode::kInputsNotMaximal: return "inputs-not-maximal";
    case ErrorCode::kFrozenNotCommon: return "frozen-not-common";
    case ErrorCode::kInternalAssertion: return "internal-assertion";
    case ErrorCode::kEndpointsNotInGraph: return "endpoints-not-in-graph";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kScaleExceeded: return "scale-exceeded";
    case ErrorCode::kNotAFace: return "not-a-face";
  }
  return "unknown";
}

bool is_theorem_violation(ErrorCode code) {
  return code == ErrorCode::kInternalAssertion ||
         code == ErrorCode::kDisconnected ||
         code == ErrorCode::kEmbeddingViolation;
}

}  // namespace plabic
