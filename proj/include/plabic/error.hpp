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

#ifndef PLABIC_ERROR_HPP
#define PLABIC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace plabic {

enum class ErrorCode {
  kInvalidArgument,
  kNecklaceInvalid,
  kPreconditionViolated,
  kDegenerateCurve,
  kNotWeaklySeparated,
  kEmbeddingViolation,
  kNotASubset,
  kReferenceNotMaximal,
  kSquareNotApplicable,
  kInputNotInPositroid,
  kFrozenInvalid,
  kInputsNotMaximal,
  kFrozenNotCommon,
  kInternalAssertion,
  kEndpointsNotInGraph,
  kDisconnected,
  kScaleExceeded,
  kNotAFace,
};

std::string_view error_code_name(ErrorCode code);

// True for codes that can only arise if a proven structural fact fails.
bool is_theorem_violation(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by validate_necklace; `index` is 1-based, `clause` is 1 (containment)
// or 2 (fixed point when i is absent), or 0 for a size/range problem.
class NecklaceError : public Error {
 public:
  NecklaceError(int index, int clause, const std::string& message)
      : Error(ErrorCode::kNecklaceInvalid, message),
        index_(index),
        clause_(clause) {}

  int index() const { return index_; }
  int clause() const { return clause_; }

 private:
  int index_;
  int clause_;
};

}  // namespace plabic

#endif  // PLABIC_ERROR_HPP
