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

#ifndef SNIPFORGE_COMMON_H_
#define SNIPFORGE_COMMON_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace snipforge {

// Half-open byte interval [begin, end) into a source text.
struct ByteRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool Contains(const ByteRange& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool Overlaps(const ByteRange& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const ByteRange&, const ByteRange&) = default;
};

// Inclusive, 1-based line interval.
struct LineRange {
  int first = 0;
  int last = 0;

  bool Contains(int line) const { return first <= line && line <= last; }
  friend bool operator==(const LineRange&, const LineRange&) = default;
};

enum class ErrorCode {
  kEmptySnippet,
  kEmptyCorpus,
  kIoFailure,
  kUnterminatedLiteral,
  kUnterminatedComment,
  kNoTargets,
  kLocatorStale,
  kInvalidInput,
  kInvalidConfig,
};

std::string_view ErrorCodeName(ErrorCode code);

// The single exception type thrown by the library. Lexical errors carry a
// 1-based source location; other errors leave it at zero.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0,
        int column = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorCode code_;
  int line_;
  int column_;
};

}  // namespace snipforge

#endif  // SNIPFORGE_COMMON_H_
