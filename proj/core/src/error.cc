// Copyright 2026 The Sperner Authors
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

#include "sperner/error.h"

namespace sperner {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotSperner: return "NotSperner";
    case ErrorCode::kNotOneSperner: return "NotOneSperner";
    case ErrorCode::kVertexCollision: return "VertexCollision";
    case ErrorCode::kNotDecomposable: return "NotDecomposable";
    case ErrorCode::kEmptyVertexSet: return "EmptyVertexSet";
    case ErrorCode::kUnsafeGluing: return "UnsafeGluing";
    case ErrorCode::kNotUniform: return "NotUniform";
    case ErrorCode::kDegenerateEdgeSet: return "DegenerateEdgeSet";
    case ErrorCode::kInvalidGenerator: return "InvalidGenerator";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorCode::kParseError,
            "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace sperner
