// Copyright 2026 The Prefaxiom Authors
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

#ifndef PREFAXIOM_ERROR_H_
#define PREFAXIOM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace prefaxiom {

enum class ErrorCode {
  kInvalidArgument,
  kSchemaError,
  kDimensionMismatch,
  kUndefinedPair,
  kUnexpectedTie,
  kIncompleteRelation,
  kNotCompleteProfile,
  kNotConstantTotal,
  kDisconnectedGraph,
  kNotConverged,
  kZeroProbability,
  kTiesNotAllowed,
  kBlockNotEmbeddable,
  kSpaceTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kUndefinedPair: return "UndefinedPair";
    case ErrorCode::kUnexpectedTie: return "UnexpectedTie";
    case ErrorCode::kIncompleteRelation: return "IncompleteRelation";
    case ErrorCode::kNotCompleteProfile: return "NotCompleteProfile";
    case ErrorCode::kNotConstantTotal: return "NotConstantTotal";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kNotConverged: return "NotConverged";
    case ErrorCode::kZeroProbability: return "ZeroProbability";
    case ErrorCode::kTiesNotAllowed: return "TiesNotAllowed";
    case ErrorCode::kBlockNotEmbeddable: return "BlockNotEmbeddable";
    case ErrorCode::kSpaceTooLarge: return "SpaceTooLarge";
  }
  return "Unknown";
}

}  // namespace prefaxiom

#endif  // PREFAXIOM_ERROR_H_
