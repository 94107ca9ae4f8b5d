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

#ifndef SPERNER_ERROR_H_
#define SPERNER_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sperner {

enum class ErrorCode {
  kInvalidLabel,
  kUnknownVertex,
  kDuplicateVertex,
  kDuplicateEdge,
  kCapExceeded,
  kNotSperner,
  kNotOneSperner,
  kVertexCollision,
  kNotDecomposable,
  kEmptyVertexSet,
  kUnsafeGluing,
  kNotUniform,
  kDegenerateEdgeSet,
  kInvalidGenerator,
  kInvalidArgument,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported by throwing Error (or a subclass). The
// code is stable and is what callers such as the CLI dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  // 1-based line number of the offending record.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sperner

#endif  // SPERNER_ERROR_H_
