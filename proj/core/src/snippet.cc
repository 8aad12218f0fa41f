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

#include "snipforge/snippet.h"

#include <cctype>

#include "snipforge/common.h"
#include "snipforge/tokenizer.h"

namespace snipforge {
namespace {

bool IsStructuralKeyword(std::string_view word) {
  return word == "import" || word == "package" || word == "class";
}

// Fallback for text the lexer rejects: whole-word search, ignoring nothing.
bool ContainsKeywordWord(std::string_view raw) {
  std::size_t i = 0;
  while (i < raw.size()) {
    const auto c = static_cast<unsigned char>(raw[i]);
    if (std::isalpha(c) || c == '_' || c == '$') {
      const std::size_t start = i;
      while (i < raw.size() &&
             (std::isalnum(static_cast<unsigned char>(raw[i])) ||
              raw[i] == '_' || raw[i] == '$')) {
        ++i;
      }
      if (IsStructuralKeyword(raw.substr(start, i - start))) return true;
    } else {
      ++i;
    }
  }
  return false;
}

bool MentionsStructuralKeyword(std::string_view raw) {
  try {
    for (const Token& t : Tokenize(raw)) {
      if (t.kind == TokenKind::kKeyword && IsStructuralKeyword(t.text)) {
        return true;
      }
    }
    return false;
  } catch (const Error&) {
    return ContainsKeywordWord(raw);
  }
}

}  // namespace

std::string WrapperClassName(std::string_view id) {
  std::string name = "C_";
  for (char c : id) {
    const auto u = static_cast<unsigned char>(c);
    name += (std::isalnum(u) || c == '_' || c == '$') ? c : '_';
  }
  return name;
}

Snippet WrapSnippet(std::string_view raw, std::string_view id) {
  bool blank = true;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      blank = false;
      break;
    }
  }
  if (blank) {
    throw Error(ErrorCode::kEmptySnippet,
                "snippet '" + std::string(id) + "' is empty");
  }

  Snippet snippet;
  snippet.id = std::string(id);
  snippet.raw_text = std::string(raw);
  if (MentionsStructuralKeyword(raw)) {
    snippet.wrapped_text = snippet.raw_text;
    snippet.wrap_applied = false;
    snippet.line_offset = 0;
    return snippet;
  }
  snippet.wrapped_text = "public class " + WrapperClassName(id) + " {\n";
  snippet.wrapped_text += raw;
  if (raw.back() != '\n') snippet.wrapped_text += '\n';
  snippet.wrapped_text += "}\n";
  snippet.wrap_applied = true;
  snippet.line_offset = 1;
  return snippet;
}

}  // namespace snipforge
