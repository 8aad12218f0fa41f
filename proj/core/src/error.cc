// Copyright 2026 The Snipforge Authors
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

#include "snipforge/common.h"

namespace snipforge {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySnippet:
      return "EMPTY_SNIPPET";
    case ErrorCode::kEmptyCorpus:
      return "EMPTY_CORPUS";
    case ErrorCode::kIoFailure:
      return "IO_FAILURE";
    case ErrorCode::kUnterminatedLiteral:
      return "UNTERMINATED_LITERAL";
    case ErrorCode::kUnterminatedComment:
      return "UNTERMINATED_COMMENT";
    case ErrorCode::kNoTargets:
      return "NO_TARGETS";
    case ErrorCode::kLocatorStale:
      return "LOCATOR_STALE";
    case ErrorCode::kInvalidInput:
      return "INVALID_INPUT";
    case ErrorCode::kInvalidConfig:
      return "INVALID_CONFIG";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message, int line, int column)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      line_(line),
      column_(column) {}

}  // namespace snipforge
