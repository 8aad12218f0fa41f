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

#ifndef SNIPFORGE_TOKENIZER_H_
#define SNIPFORGE_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "snipforge/common.h"

namespace snipforge {

enum class TokenKind {
  kIdent,
  kKeyword,
  kStringLit,
  kCharLit,
  kNumLit,
  kOperator,
  kPunct,
  kComment,
  kWhitespace,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kWhitespace;
  std::string text;
  ByteRange span;
  int line = 1;    // 1-based line of span.begin
  int column = 1;  // 1-based byte column of span.begin

  bool IsTrivia() const {
    return kind == TokenKind::kWhitespace || kind == TokenKind::kComment;
  }
  bool Is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
};

// Splits `text` into a gap-free token sequence: whitespace and comments are
// tokens too, so concatenating every token's text reproduces the input.
//
// `>` is always emitted as a single-character operator; the parser joins
// adjacent `>` characters into shift and comparison operators.
//
// Throws Error(kUnterminatedLiteral / kUnterminatedComment) with the location
// of the opening delimiter.
std::vector<Token> Tokenize(std::string_view text);

std::string Detokenize(const std::vector<Token>& tokens);

bool IsJavaKeyword(std::string_view word);

// Decodes the escapes of a string or char literal body (quotes excluded) and
// returns the number of UTF-16 code units, which is what Java's length()
// reports for BMP text.
std::size_t DecodedLiteralLength(std::string_view literal_token);

}  // namespace snipforge

#endif  // SNIPFORGE_TOKENIZER_H_
