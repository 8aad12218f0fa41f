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

#include "snipforge/tokenizer.h"

#include <algorithm>
#include <array>

namespace snipforge {
namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean",   "break",      "byte",
    "case",     "catch",      "char",      "class",      "const",
    "continue", "default",    "do",        "double",     "else",
    "enum",     "extends",    "final",     "finally",    "float",
    "for",      "goto",       "if",        "implements", "import",
    "instanceof", "int",      "interface", "long",       "native",
    "new",      "package",    "private",   "protected",  "public",
    "return",   "short",      "static",    "strictfp",   "super",
    "switch",   "synchronized", "this",    "throw",      "throws",
    "transient", "try",       "void",      "volatile",   "while",
    "true",     "false",      "null",
};

// Longest-match first. `>`-prefixed operators are deliberately absent.
constexpr std::array<std::string_view, 29> kOperators = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=",
    "<=",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<",
    "=",   "<",   "+",  "-",  "*",  "/",  "%",  "&",  "|",
};

bool IsIdentStart(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

bool IsIdentPart(unsigned char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9');
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const std::size_t start = pos_;
      const int line = line_;
      const int column = column_;
      const TokenKind kind = LexOne();
      Token token;
      token.kind = kind;
      token.text = std::string(text_.substr(start, pos_ - start));
      token.span = {start, pos_};
      token.line = line;
      token.column = column;
      out.push_back(std::move(token));
    }
    return out;
  }

 private:
  unsigned char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size()
               ? static_cast<unsigned char>(text_[pos_ + ahead])
               : '\0';
  }
  bool AtEnd(std::size_t ahead = 0) const {
    return pos_ + ahead >= text_.size();
  }

  void Advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  TokenKind LexOne() {
    const unsigned char c = Peek();
    if (IsSpace(c)) {
      while (!AtEnd() && IsSpace(Peek())) Advance();
      return TokenKind::kWhitespace;
    }
    if (c == '/' && Peek(1) == '/') {
      while (!AtEnd() && Peek() != '\n') Advance();
      return TokenKind::kComment;
    }
    if (c == '/' && Peek(1) == '*') {
      const int line = line_;
      const int column = column_;
      Advance(2);
      while (!(Peek() == '*' && Peek(1) == '/')) {
        if (AtEnd()) {
          throw Error(ErrorCode::kUnterminatedComment,
                      "comment opened at line " + std::to_string(line) +
                          " is never closed",
                      line, column);
        }
        Advance();
      }
      Advance(2);
      return TokenKind::kComment;
    }
    if (c == '"') {
      if (Peek(1) == '"' && Peek(2) == '"') return LexTextBlock();
      LexQuoted('"');
      return TokenKind::kStringLit;
    }
    if (c == '\'') {
      LexQuoted('\'');
      return TokenKind::kCharLit;
    }
    if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) {
      LexNumber();
      return TokenKind::kNumLit;
    }
    if (IsIdentStart(c)) {
      const std::size_t start = pos_;
      while (!AtEnd() && IsIdentPart(Peek())) Advance();
      return IsJavaKeyword(text_.substr(start, pos_ - start))
                 ? TokenKind::kKeyword
                 : TokenKind::kIdent;
    }
    switch (c) {
      case '(':
      case ')':
      case '{':
      case '}':
      case '[':
      case ']':
      case ';':
      case ',':
      case '@':
        Advance();
        return TokenKind::kPunct;
      case '.':
        Advance(text_.substr(pos_, 3) == "..." ? 3 : 1);
        return TokenKind::kPunct;
      default:
        break;
    }
    for (std::string_view op : kOperators) {
      if (text_.substr(pos_, op.size()) == op) {
        Advance(op.size());
        return TokenKind::kOperator;
      }
    }
    // `>`, `!`, `~`, `?`, `:`, `^` and any stray byte end up here.
    if (c == '!' && Peek(1) == '=') {
      Advance(2);
    } else {
      Advance();
    }
    return TokenKind::kOperator;
  }

  void LexQuoted(char quote) {
    const int line = line_;
    const int column = column_;
    Advance();
    while (true) {
      if (AtEnd() || Peek() == '\n') {
        throw Error(ErrorCode::kUnterminatedLiteral,
                    std::string(quote == '"' ? "string" : "char") +
                        " literal opened at line " + std::to_string(line) +
                        " is not terminated",
                    line, column);
      }
      const unsigned char ch = Peek();
      if (ch == '\\') {
        Advance(AtEnd(1) ? 1 : 2);
        continue;
      }
      Advance();
      if (ch == static_cast<unsigned char>(quote)) return;
    }
  }

  TokenKind LexTextBlock() {
    const int line = line_;
    const int column = column_;
    Advance(3);
    while (true) {
      if (AtEnd()) {
        throw Error(ErrorCode::kUnterminatedLiteral,
                    "text block opened at line " + std::to_string(line) +
                        " is not terminated",
                    line, column);
      }
      if (Peek() == '\\') {
        Advance(2);
        continue;
      }
      if (Peek() == '"' && Peek(1) == '"' && Peek(2) == '"') {
        Advance(3);
        return TokenKind::kStringLit;
      }
      Advance();
    }
  }

  void LexNumber() {
    const bool hex = Peek() == '0' && (Peek(1) == 'x' || Peek(1) == 'X');
    while (!AtEnd()) {
      const unsigned char ch = Peek();
      if (IsDigit(ch) || ch == '_' || (ch >= 'a' && ch <= 'z') ||
          (ch >= 'A' && ch <= 'Z')) {
        const bool exponent =
            hex ? (ch == 'p' || ch == 'P') : (ch == 'e' || ch == 'E');
        Advance();
        if (exponent && (Peek() == '+' || Peek() == '-')) Advance();
        continue;
      }
      if (ch == '.' && IsDigitOrExponentAfterDot()) {
        Advance();
        continue;
      }
      break;
    }
  }

  // A '.' continues a number literal unless it starts a member access or a
  // `...` ellipsis.
  bool IsDigitOrExponentAfterDot() const {
    const unsigned char next = Peek(1);
    if (next == '.') return false;
    return !IsIdentStart(next) || next == 'e' || next == 'E' || next == 'f' ||
           next == 'F' || next == 'd' || next == 'D';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent:
      return "IDENT";
    case TokenKind::kKeyword:
      return "KEYWORD";
    case TokenKind::kStringLit:
      return "STRING_LIT";
    case TokenKind::kCharLit:
      return "CHAR_LIT";
    case TokenKind::kNumLit:
      return "NUM_LIT";
    case TokenKind::kOperator:
      return "OPERATOR";
    case TokenKind::kPunct:
      return "PUNCT";
    case TokenKind::kComment:
      return "COMMENT";
    case TokenKind::kWhitespace:
      return "WHITESPACE";
  }
  return "UNKNOWN";
}

bool IsJavaKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) !=
         kKeywords.end();
}

std::vector<Token> Tokenize(std::string_view text) {
  return Lexer(text).Run();
}

std::string Detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) out += t.text;
  return out;
}

std::size_t DecodedLiteralLength(std::string_view literal_token) {
  std::string_view body = literal_token;
  if (body.size() >= 6 && body.substr(0, 3) == "\"\"\"") {
    body = body.substr(3, body.size() - 6);
  } else if (body.size() >= 2) {
    body = body.substr(1, body.size() - 2);
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < body.size();) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c == '\\' && i + 1 < body.size()) {
      const char e = body[i + 1];
      if (e == 'u') {
        std::size_t j = i + 1;
        while (j < body.size() && body[j] == 'u') ++j;
        i = std::min(body.size(), j + 4);
      } else if (e >= '0' && e <= '7') {
        std::size_t j = i + 1;
        const std::size_t max_digits = e <= '3' ? 3 : 2;
        while (j < body.size() && j - (i + 1) < max_digits && body[j] >= '0' &&
               body[j] <= '7') {
          ++j;
        }
        i = j;
      } else {
        i += 2;
      }
      ++count;
      continue;
    }
    // UTF-8: count lead bytes only; 4-byte sequences are surrogate pairs.
    if ((c & 0xC0) != 0x80) count += (c >= 0xF0) ? 2 : 1;
    ++i;
  }
  return count;
}

}  // namespace snipforge
