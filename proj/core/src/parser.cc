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

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snipforge/source_unit.h"

namespace snipforge {
namespace {

struct SyntaxFailure {
  ParseFailure kind;
  std::string message;
  std::size_t token;  // index into the significant-token list
};

constexpr std::array<std::string_view, 9> kPrimitiveTypes = {
    "boolean", "byte", "char", "short", "int",
    "long",    "float", "double", "void",
};

constexpr std::array<std::string_view, 12> kModifiers = {
    "public",   "protected", "private",      "static",
    "final",    "abstract",  "native",       "synchronized",
    "transient", "volatile", "strictfp",     "default",
};

bool IsPrimitive(const Token& t) {
  return t.kind == TokenKind::kKeyword &&
         std::find(kPrimitiveTypes.begin(), kPrimitiveTypes.end(), t.text) !=
             kPrimitiveTypes.end();
}

int BinaryPrecedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=" ||
      op == "instanceof") {
    return 7;
  }
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return -1;
}

bool IsAssignOp(std::string_view op) {
  static constexpr std::array<std::string_view, 12> kOps = {
      "=",  "+=", "-=", "*=",  "/=",  "%=",
      "&=", "|=", "^=", "<<=", ">>=", ">>>=",
  };
  return std::find(kOps.begin(), kOps.end(), op) != kOps.end();
}

struct Modifiers {
  bool is_final = false;
  bool is_static = false;
};

class Parser {
 public:
  explicit Parser(SourceUnit& unit) : u_(unit) {
    for (const Token& t : u_.tokens) {
      if (!t.IsTrivia()) toks_.push_back(&t);
    }
    eof_.kind = TokenKind::kWhitespace;
    eof_.span = {u_.text.size(), u_.text.size()};
    if (!u_.tokens.empty()) {
      const Token& last = u_.tokens.back();
      eof_.line = last.line;
      eof_.column = last.column + static_cast<int>(last.text.size());
      for (char c : last.text) {
        if (c == '\n') {
          ++eof_.line;
          eof_.column = 1;
        }
      }
    }
  }

  void ParseCompilationUnit() {
    if (At("package")) SkipPast(";");
    while (At("import")) SkipPast(";");
    while (!AtEof()) {
      if (At(";")) {
        Next();
        continue;
      }
      const std::size_t start = Cur().span.begin;
      ParseModifiers();
      ParseTypeAfterModifiers(start, -1);
    }
  }

  const Token& TokenAt(std::size_t index) const {
    return index < toks_.size() ? *toks_[index] : eof_;
  }

 private:
  // ---- token cursor -------------------------------------------------------

  const Token& Cur() const { return TokenAt(pos_); }
  const Token& Peek(std::size_t ahead) const { return TokenAt(pos_ + ahead); }
  const Token& Prev() const { return TokenAt(pos_ == 0 ? 0 : pos_ - 1); }
  bool AtEof() const { return pos_ >= toks_.size(); }
  void Next() {
    if (!AtEof()) ++pos_;
  }

  static bool Matches(const Token& t, std::string_view text) {
    switch (t.kind) {
      case TokenKind::kIdent:
      case TokenKind::kKeyword:
      case TokenKind::kOperator:
      case TokenKind::kPunct:
        return t.text == text;
      default:
        return false;
    }
  }
  bool At(std::string_view text) const { return Matches(Cur(), text); }
  bool PeekIs(std::size_t ahead, std::string_view text) const {
    return Matches(Peek(ahead), text);
  }
  bool AtIdent() const { return Cur().kind == TokenKind::kIdent; }

  [[noreturn]] void Fail(const std::string& message) const {
    throw SyntaxFailure{ParseFailure::kSyntax, message, pos_};
  }
  [[noreturn]] void Unsupported(const std::string& message) const {
    throw SyntaxFailure{ParseFailure::kUnsupported, message, pos_};
  }

  std::string Describe(const Token& t) const {
    return &t == &eof_ ? std::string("end of input") : "'" + t.text + "'";
  }

  void Expect(std::string_view text) {
    if (!At(text)) {
      Fail("expected '" + std::string(text) + "' but found " +
           Describe(Cur()));
    }
    Next();
  }

  std::string ExpectIdent() {
    if (!AtIdent()) Fail("expected an identifier but found " + Describe(Cur()));
    std::string name = Cur().text;
    Next();
    return name;
  }

  void SkipPast(std::string_view text) {
    while (!AtEof() && !At(text)) Next();
    Expect(text);
  }

  // Skips a balanced open/close pair starting at the current token.
  void SkipBalanced(std::string_view open, std::string_view close) {
    int depth = 0;
    do {
      if (AtEof()) Fail("unbalanced '" + std::string(open) + "'");
      if (At(open)) ++depth;
      if (At(close)) --depth;
      Next();
    } while (depth > 0);
  }

  // Joins adjacent single-character '>' tokens (and a trailing '=') into one
  // operator. Returns the operator and how many tokens it spans.
  std::pair<std::string, std::size_t> GreaterOperatorAt(std::size_t index) const {
    std::string op = ">";
    std::size_t n = 1;
    while (n < 3 && Matches(TokenAt(index + n), ">") &&
           TokenAt(index + n).span.begin == TokenAt(index + n - 1).span.end) {
      op += ">";
      ++n;
    }
    if (Matches(TokenAt(index + n), "=") &&
        TokenAt(index + n).span.begin == TokenAt(index + n - 1).span.end) {
      op += "=";
      ++n;
    }
    return {op, n};
  }

  // ---- line bookkeeping ---------------------------------------------------

  LineRange LinesOf(ByteRange span) const {
    const int first = u_.LineOf(span.begin);
    const int last = u_.LineOf(span.end > span.begin ? span.end - 1 : span.begin);
    return {first, last};
  }

  // ---- declarations -------------------------------------------------------

  void SkipAnnotation() {
    Expect("@");
    ExpectIdent();
    while (At(".") && Peek(1).kind == TokenKind::kIdent) {
      Next();
      Next();
    }
    if (At("(")) SkipBalanced("(", ")");
  }

  Modifiers ParseModifiers() {
    Modifiers m;
    while (true) {
      if (At("@") && !PeekIs(1, "interface")) {
        SkipAnnotation();
        continue;
      }
      const Token& t = Cur();
      if (t.kind == TokenKind::kKeyword &&
          std::find(kModifiers.begin(), kModifiers.end(), t.text) !=
              kModifiers.end()) {
        // `default:` inside a switch never reaches here.
        m.is_final |= t.text == "final";
        m.is_static |= t.text == "static";
        Next();
        continue;
      }
      if (AtIdent() && (t.text == "sealed") && Peek(1).kind != TokenKind::kPunct) {
        Next();
        continue;
      }
      return m;
    }
  }

  void ParseTypeAfterModifiers(std::size_t start, int outer) {
    if (At("class")) {
      ParseClass(start, outer);
    } else if (At("interface") || At("enum")) {
      SkipOpaqueType();
    } else if (At("@") && PeekIs(1, "interface")) {
      Next();
      SkipOpaqueType();
    } else if (AtIdent() && Cur().text == "record" &&
               Peek(1).kind == TokenKind::kIdent) {
      Unsupported("record declarations are not supported");
    } else {
      Fail("expected a type declaration but found " + Describe(Cur()));
    }
  }

  void SkipOpaqueType() {
    while (!AtEof() && !At("{")) Next();
    SkipBalanced("{", "}");
  }

  void ParseClass(std::size_t start, int outer) {
    Expect("class");
    const int index = static_cast<int>(u_.classes.size());
    u_.classes.push_back(ClassDecl{});
    u_.classes[index].name = ExpectIdent();
    u_.classes[index].outer = outer;
    if (At("<")) SkipTypeArguments();
    if (At("extends")) {
      Next();
      ParseType();
    }
    if (At("implements")) {
      Next();
      ParseType();
      while (At(",")) {
        Next();
        ParseType();
      }
    }
    if (AtIdent() && Cur().text == "permits") {
      Next();
      ParseType();
      while (At(",")) {
        Next();
        ParseType();
      }
    }
    Expect("{");
    while (!At("}")) {
      if (AtEof()) Fail("class body is not closed");
      ParseMember(index);
    }
    u_.classes[index].span = {start, Cur().span.end};
    Next();
  }

  void ParseMember(int class_index) {
    if (At(";")) {
      Next();
      return;
    }
    const std::size_t start = Cur().span.begin;
    if (At("{")) {
      ParseBody(BodyKind::kInitializer, "<init>", class_index, {}, {});
      return;
    }
    if (At("static") && PeekIs(1, "{")) {
      Next();
      ParseBody(BodyKind::kInitializer, "<clinit>", class_index, {}, {});
      return;
    }
    const Modifiers mods = ParseModifiers();
    if (At("class") || At("interface") || At("enum") ||
        (At("@") && PeekIs(1, "interface")) ||
        (AtIdent() && Cur().text == "record" &&
         Peek(1).kind == TokenKind::kIdent)) {
      ParseTypeAfterModifiers(start, class_index);
      return;
    }
    if (At("<")) SkipTypeArguments();

    if (AtIdent() && Cur().text == u_.classes[class_index].name &&
        PeekIs(1, "(")) {
      const std::string name = ExpectIdent();
      std::vector<VarDecl> params = ParseParameters();
      SkipThrows();
      const ByteRange signature{start, Prev().span.end};
      if (!At("{")) Fail("expected constructor body");
      ParseBody(BodyKind::kConstructor, name, class_index, std::move(params),
                signature);
      return;
    }

    const std::string type = ParseType();
    if (!AtIdent()) Fail("expected a member name but found " + Describe(Cur()));
    if (PeekIs(1, "(")) {
      const std::string name = ExpectIdent();
      std::vector<VarDecl> params = ParseParameters();
      while (At("[") && PeekIs(1, "]")) {
        Next();
        Next();
      }
      SkipThrows();
      const ByteRange signature{start, Prev().span.end};
      if (At(";")) {
        Next();  // abstract or native: no body, not a method region
        return;
      }
      if (!At("{")) Fail("expected method body but found " + Describe(Cur()));
      ParseBody(BodyKind::kMethod, name, class_index, std::move(params),
                signature);
      return;
    }

    // Field declaration.
    const int saved_stmt = current_stmt_;
    current_stmt_ = -1;
    while (true) {
      FieldDecl field;
      const std::size_t decl_start = Cur().span.begin;
      field.name = ExpectIdent();
      field.type = type + ParseDims();
      field.line = u_.LineOf(decl_start);
      field.is_final = mods.is_final;
      field.is_static = mods.is_static;
      if (At("=")) {
        Next();
        field.init = ParseVariableInitializer();
      }
      field.span = {decl_start, Prev().span.end};
      u_.classes[class_index].fields.push_back(std::move(field));
      if (At(",")) {
        Next();
        continue;
      }
      break;
    }
    current_stmt_ = saved_stmt;
    Expect(";");
  }

  std::string ParseDims() {
    std::string dims;
    while (At("[") && PeekIs(1, "]")) {
      Next();
      Next();
      dims += "[]";
    }
    return dims;
  }

  void SkipThrows() {
    if (!At("throws")) return;
    Next();
    ParseType();
    while (At(",")) {
      Next();
      ParseType();
    }
  }

  std::vector<VarDecl> ParseParameters() {
    Expect("(");
    std::vector<VarDecl> params;
    while (!At(")")) {
      ParseModifiers();
      VarDecl param;
      param.type = ParseType();
      if (At("...")) {
        Next();
        param.type += "[]";
      }
      if (At("this")) {  // receiver parameter
        Next();
      } else {
        param.name_span = Cur().span;
        param.line = Cur().line;
        param.name = ExpectIdent();
        param.type += ParseDims();
        params.push_back(std::move(param));
      }
      if (!At(",")) break;
      Next();
    }
    Expect(")");
    return params;
  }

  void ParseBody(BodyKind kind, std::string name, int class_index,
                 std::vector<VarDecl> params, ByteRange signature) {
    const int body_index = static_cast<int>(u_.bodies.size());
    CodeBody body;
    body.kind = kind;
    body.name = std::move(name);
    body.class_index = class_index;
    body.params = std::move(params);
    u_.bodies.push_back(std::move(body));

    const int saved_body = current_body_;
    current_body_ = body_index;
    const int block = ParseBlock(std::nullopt);
    current_body_ = saved_body;
    u_.bodies[body_index].block = block;

    if (kind != BodyKind::kMethod) return;
    MethodRegion region;
    region.name = u_.bodies[body_index].name;
    region.signature_span = signature;
    region.body_span = u_.statements[block].span;
    region.body_line_range = u_.statements[block].lines;
    for (int id = block; id < static_cast<int>(u_.statements.size()); ++id) {
      region.statement_ids.push_back(id);
    }
    region.body = body_index;
    u_.bodies[body_index].method = static_cast<int>(u_.methods.size());
    u_.methods.push_back(std::move(region));
  }

  // ---- types --------------------------------------------------------------

  void SkipTypeArguments() {
    Expect("<");
    if (At(">")) {  // diamond
      Next();
      return;
    }
    while (true) {
      while (At("@")) SkipAnnotation();
      if (At("?")) {
        Next();
        if (At("extends") || At("super")) {
          Next();
          ParseType();
          while (At("&")) {
            Next();
            ParseType();
          }
        }
      } else if (AtIdent() && PeekIs(1, "extends")) {  // type parameter bound
        Next();
        Next();
        ParseType();
        while (At("&")) {
          Next();
          ParseType();
        }
      } else {
        ParseType();
      }
      if (At(",")) {
        Next();
        continue;
      }
      break;
    }
    Expect(">");
  }

  std::string TextBetween(std::size_t from_token, std::size_t to_token) const {
    std::string text;
    for (std::size_t i = from_token; i < to_token; ++i) text += TokenAt(i).text;
    return text;
  }

  std::string ParseTypeNoDims() {
    while (At("@")) SkipAnnotation();
    const std::size_t type_start = pos_;
    if (IsPrimitive(Cur())) {
      Next();
      return TextBetween(type_start, pos_);
    }
    if (!AtIdent()) Fail("expected a type but found " + Describe(Cur()));
    Next();
    if (At("<")) SkipTypeArguments();
    while (At(".") && Peek(1).kind == TokenKind::kIdent) {
      Next();
      Next();
      if (At("<")) SkipTypeArguments();
    }
    return TextBetween(type_start, pos_);
  }

  std::string ParseType() {
    std::string text = ParseTypeNoDims();
    text += ParseDims();
    return text;
  }

  template <typename Fn>
  bool Speculate(Fn&& fn) {
    const std::size_t saved = pos_;
    bool result = false;
    try {
      result = fn();
    } catch (const SyntaxFailure&) {
      result = false;
    }
    pos_ = saved;
    return result;
  }

  bool LooksLikeLocalDecl() {
    if (At("final") || (At("@") && !PeekIs(1, "interface"))) return true;
    if (!AtIdent() && !IsPrimitive(Cur())) return false;
    return Speculate([this] {
      ParseType();
      if (!AtIdent()) return false;
      return PeekIs(1, "=") || PeekIs(1, ";") || PeekIs(1, ",") ||
             PeekIs(1, "[") || PeekIs(1, ":");
    });
  }

  // ---- statements ---------------------------------------------------------

  int NewStmt(StmtKind kind, std::optional<int> parent) {
    const int id = static_cast<int>(u_.statements.size());
    StatementNode node;
    node.id = id;
    node.kind = kind;
    node.span.begin = Cur().span.begin;
    node.parent = parent;
    node.body = current_body_;
    u_.statements.push_back(std::move(node));
    if (parent) u_.statements[*parent].children.push_back(id);
    return id;
  }

  void FinishStmt(int id) {
    StatementNode& node = u_.statements[id];
    node.span.end = Prev().span.end;
    node.lines = LinesOf(node.span);
  }

  int ParseBlock(std::optional<int> parent) {
    if (!At("{")) Fail("expected '{' but found " + Describe(Cur()));
    const int id = NewStmt(StmtKind::kBlock, parent);
    Next();
    while (!At("}")) {
      if (AtEof()) Fail("block is not closed");
      ParseStatement(id);
    }
    Next();
    FinishStmt(id);
    return id;
  }

  ExprId ParseOwnedExpr(int stmt) {
    const int saved = current_stmt_;
    current_stmt_ = stmt;
    const ExprId e = ParseExpression();
    current_stmt_ = saved;
    return e;
  }

  void ParseDeclarators(int stmt, const std::string& type) {
    const int saved = current_stmt_;
    current_stmt_ = stmt;
    while (true) {
      VarDecl decl;
      decl.name_span = Cur().span;
      decl.line = Cur().line;
      decl.name = ExpectIdent();
      decl.type = type + ParseDims();
      if (At("=")) {
        Next();
        decl.init = ParseVariableInitializer();
      }
      u_.statements[stmt].decls.push_back(std::move(decl));
      if (!At(",")) break;
      Next();
    }
    current_stmt_ = saved;
  }

  void ParseStatement(int parent) {
    const Token& t = Cur();
    if (At("{")) {
      ParseBlock(parent);
      return;
    }
    if (At(";")) {
      const int id = NewStmt(StmtKind::kEmpty, parent);
      Next();
      FinishStmt(id);
      return;
    }
    if (t.kind == TokenKind::kKeyword) {
      if (t.text == "if") return ParseIf(parent);
      if (t.text == "for") return ParseFor(parent);
      if (t.text == "while") return ParseWhile(parent);
      if (t.text == "do") return ParseDo(parent);
      if (t.text == "switch") return ParseSwitch(parent);
      if (t.text == "try") return ParseTry(parent);
      if (t.text == "return" || t.text == "throw") {
        const int id = NewStmt(
            t.text == "return" ? StmtKind::kReturn : StmtKind::kThrow, parent);
        const bool is_throw = t.text == "throw";
        Next();
        if (is_throw || !At(";")) {
          u_.statements[id].exprs.push_back(ParseOwnedExpr(id));
        }
        Expect(";");
        FinishStmt(id);
        return;
      }
      if (t.text == "break" || t.text == "continue") {
        const int id = NewStmt(
            t.text == "break" ? StmtKind::kBreak : StmtKind::kContinue, parent);
        Next();
        if (AtIdent()) Next();
        Expect(";");
        FinishStmt(id);
        return;
      }
      if (t.text == "synchronized") {
        const int id = NewStmt(StmtKind::kSyncBlock, parent);
        Next();
        Expect("(");
        u_.statements[id].exprs.push_back(ParseOwnedExpr(id));
        Expect(")");
        ParseBlock(id);
        FinishStmt(id);
        return;
      }
      if (t.text == "class" || t.text == "interface" || t.text == "enum" ||
          t.text == "abstract" || t.text == "static") {
        Unsupported("local type declarations are not supported");
      }
      if (t.text == "assert") Unsupported("assert statements are not supported");
      if (t.text == "else" || t.text == "case" || t.text == "default" ||
          t.text == "catch" || t.text == "finally") {
        Fail("unexpected " + Describe(t));
      }
    }
    if (AtIdent() && PeekIs(1, ":")) {
      Unsupported("labeled statements are not supported");
    }
    if (AtIdent() && (t.text == "record") && Peek(1).kind == TokenKind::kIdent &&
        PeekIs(2, "(")) {
      Unsupported("local record declarations are not supported");
    }
    if (LooksLikeLocalDecl()) {
      const int id = NewStmt(StmtKind::kLocalDecl, parent);
      ParseModifiers();
      if (At("class") || At("interface") || At("enum")) {
        Unsupported("local type declarations are not supported");
      }
      const std::string type = ParseType();
      ParseDeclarators(id, type);
      Expect(";");
      FinishStmt(id);
      return;
    }
    const int id = NewStmt(StmtKind::kExprStmt, parent);
    const ExprId e = ParseOwnedExpr(id);
    switch (u_.exprs[e].kind) {
      case ExprKind::kAssign:
      case ExprKind::kCall:
      case ExprKind::kNew:
      case ExprKind::kPostfix:
        break;
      case ExprKind::kUnary:
        if (u_.exprs[e].text == "++" || u_.exprs[e].text == "--") break;
        [[fallthrough]];
      default:
        throw SyntaxFailure{ParseFailure::kSyntax, "not a statement",
                            FirstTokenAtOrAfter(u_.exprs[e].span.begin)};
    }
    u_.statements[id].exprs.push_back(e);
    Expect(";");
    FinishStmt(id);
  }

  std::size_t FirstTokenAtOrAfter(std::size_t offset) const {
    auto it = std::lower_bound(
        toks_.begin(), toks_.end(), offset,
        [](const Token* tok, std::size_t off) { return tok->span.begin < off; });
    return static_cast<std::size_t>(it - toks_.begin());
  }

  void ParseIf(int parent) {
    const int id = NewStmt(StmtKind::kIf, parent);
    Next();
    Expect("(");
    u_.statements[id].exprs.push_back(ParseOwnedExpr(id));
    Expect(")");
    ParseStatement(id);
    if (At("else")) {
      Next();
      ParseStatement(id);
    }
    FinishStmt(id);
  }

  void ParseWhile(int parent) {
    const int id = NewStmt(StmtKind::kWhile, parent);
    Next();
    Expect("(");
    u_.statements[id].exprs.push_back(ParseOwnedExpr(id));
    Expect(")");
    ParseStatement(id);
    FinishStmt(id);
  }

  void ParseDo(int parent) {
    const int id = NewStmt(StmtKind::kDo, parent);
    Next();
    ParseStatement(id);
    Expect("while");
    Expect("(");
    u_.statements[id].exprs.push_back(ParseOwnedExpr(id));
    Expect(")");
    Expect(";");
    FinishStmt(id);
  }

  void ParseFor(int parent) {
    const int id = NewStmt(StmtKind::kFor, parent);
    Next();
    Expect("(");
    if (LooksLikeLocalDecl()) {
      ParseModifiers();
      const std::string type = ParseType();
      if (AtIdent() && PeekIs(1, ":")) {
        u_.statements[id].kind = StmtKind::kForeach;
        VarDecl var;
        var.name_span = Cur().span;
        var.line = Cur().line;
        var.name = ExpectIdent();
        var.type = type;
        Expect(":");
        u_.statements[id].exprs.push_back(ParseOwnedExpr(id));
        u_.statements[id].decls.push_back(std::move(var));
        Expect(")");
        ParseStatement(id);
        FinishStmt(id);
        return;
      }
      ParseDeclarators(id, type);
    } else {
      while (!At(";")) {
        u_.statements[id].exprs.push_back(ParseOwnedExpr(id));
        if (!At(",")) break;
        Next();
      }
    }
    Expect(";");
    if (!At(";")) u_.statements[id].exprs.push_back(ParseOwnedExpr(id));
    Expect(";");
    while (!At(")")) {
      u_.statements[id].exprs.push_back(ParseOwnedExpr(id));
      if (!At(",")) break;
      Next();
    }
    Expect(")");
    ParseStatement(id);
    FinishStmt(id);
  }

  void ParseSwitch(int parent) {
    const int id = NewStmt(StmtKind::kSwitch, parent);
    Next();
    Expect("(");
    u_.statements[id].exprs.push_back(ParseOwnedExpr(id));
    Expect(")");
    Expect("{");
    while (!At("}")) {
      if (!At("case") && !At("default")) {
        if (AtEof()) Fail("switch body is not closed");
        Fail("expected 'case' or 'default' but found " + Describe(Cur()));
      }
      const int group = NewStmt(StmtKind::kSwitchCaseGroup, id);
      while (At("case") || At("default")) {
        if (At("default")) {
          Next();
        } else {
          Next();
          in_case_label_ = true;
          while (true) {
            u_.statements[group].labels.push_back(ParseOwnedExpr(group));
            if (!At(",")) break;
            Next();
          }
          in_case_label_ = false;
        }
        if (At("->")) Unsupported("arrow-form switch labels are not supported");
        Expect(":");
      }
      while (!At("case") && !At("default") && !At("}")) {
        if (AtEof()) Fail("switch body is not closed");
        ParseStatement(group);
      }
      FinishStmt(group);
    }
    Next();
    FinishStmt(id);
  }

  void ParseTry(int parent) {
    const int id = NewStmt(StmtKind::kTry, parent);
    Next();
    bool has_resources = false;
    if (At("(")) {
      has_resources = true;
      Next();
      const int saved = current_stmt_;
      current_stmt_ = id;
      while (!At(")")) {
        if (LooksLikeLocalDecl()) {
          ParseModifiers();
          VarDecl decl;
          decl.type = ParseType();
          decl.name_span = Cur().span;
          decl.line = Cur().line;
          decl.name = ExpectIdent();
          Expect("=");
          decl.init = ParseExpression();
          u_.statements[id].decls.push_back(std::move(decl));
        } else {
          u_.statements[id].exprs.push_back(ParseExpression());
        }
        if (!At(";")) break;
        Next();
      }
      current_stmt_ = saved;
      Expect(")");
    }
    ParseBlock(id);
    bool has_handler = false;
    while (At("catch")) {
      has_handler = true;
      Next();
      Expect("(");
      ParseModifiers();
      VarDecl param;
      param.type = ParseType();
      while (At("|")) {
        Next();
        param.type += "|" + ParseType();
      }
      param.name_span = Cur().span;
      param.line = Cur().line;
      param.name = ExpectIdent();
      Expect(")");
      const int block = ParseBlock(id);
      u_.statements[block].decls.push_back(std::move(param));
    }
    if (At("finally")) {
      has_handler = true;
      Next();
      ParseBlock(id);
    }
    if (!has_handler && !has_resources) {
      Fail("'try' without 'catch' or 'finally'");
    }
    FinishStmt(id);
  }

  // ---- expressions --------------------------------------------------------

  ExprId NewExpr(ExprKind kind, std::size_t begin) {
    const ExprId id = static_cast<ExprId>(u_.exprs.size());
    Expr e;
    e.kind = kind;
    e.span.begin = begin;
    e.stmt = current_stmt_;
    u_.exprs.push_back(std::move(e));
    return id;
  }

  ExprId FinishExpr(ExprId id) {
    Expr& e = u_.exprs[id];
    e.span.end = Prev().span.end;
    e.line = u_.LineOf(e.span.begin);
    if (e.op_line == 0) e.op_line = e.line;
    if (e.target != kNoExpr) u_.exprs[e.target].parent = id;
    for (ExprId child : e.operands) u_.exprs[child].parent = id;
    return id;
  }

  ExprId ParseVariableInitializer() {
    if (At("{")) return ParseArrayInit();
    return ParseExpression();
  }

  ExprId ParseArrayInit() {
    const ExprId id = NewExpr(ExprKind::kArrayInit, Cur().span.begin);
    Expect("{");
    while (!At("}")) {
      const ExprId element = ParseVariableInitializer();
      u_.exprs[id].operands.push_back(element);
      if (!At(",")) break;
      Next();
    }
    Expect("}");
    return FinishExpr(id);
  }

  ExprId ParseExpression() { return ParseAssignment(); }

  bool LambdaAhead() const {
    if (in_case_label_) return false;
    if (AtIdent() && PeekIs(1, "->")) return true;
    if (!At("(")) return false;
    int depth = 0;
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      if (Matches(*toks_[i], "(")) ++depth;
      if (Matches(*toks_[i], ")") && --depth == 0) {
        return Matches(TokenAt(i + 1), "->");
      }
    }
    return false;
  }

  ExprId ParseLambda() {
    const ExprId id = NewExpr(ExprKind::kLambda, Cur().span.begin);
    const std::size_t params_start = pos_;
    if (AtIdent()) {
      Next();
    } else {
      SkipBalanced("(", ")");
    }
    u_.exprs[id].text = TextBetween(params_start, pos_);
    Expect("->");
    if (At("{")) Unsupported("lambda bodies with statements are not supported");
    const ExprId body = ParseExpression();
    u_.exprs[id].operands.push_back(body);
    return FinishExpr(id);
  }

  ExprId ParseAssignment() {
    if (LambdaAhead()) return ParseLambda();
    const std::size_t begin = Cur().span.begin;
    const ExprId lhs = ParseConditional();
    std::string op;
    std::size_t width = 1;
    if (At(">")) {
      std::tie(op, width) = GreaterOperatorAt(pos_);
    } else if (Cur().kind == TokenKind::kOperator) {
      op = Cur().text;
    }
    if (!IsAssignOp(op)) return lhs;
    pos_ += width;
    const ExprId rhs = ParseAssignment();
    const ExprId id = NewExpr(ExprKind::kAssign, begin);
    u_.exprs[id].text = op;
    u_.exprs[id].operands = {lhs, rhs};
    return FinishExpr(id);
  }

  ExprId ParseConditional() {
    const std::size_t begin = Cur().span.begin;
    const ExprId cond = ParseBinary(1);
    if (!At("?")) return cond;
    Next();
    const ExprId then_expr = ParseExpression();
    Expect(":");
    const ExprId else_expr = LambdaAhead() ? ParseLambda() : ParseConditional();
    const ExprId id = NewExpr(ExprKind::kConditional, begin);
    u_.exprs[id].operands = {cond, then_expr, else_expr};
    return FinishExpr(id);
  }

  bool PeekBinaryOperator(std::string* op, std::size_t* width) const {
    const Token& t = Cur();
    if (t.kind == TokenKind::kKeyword && t.text == "instanceof") {
      *op = "instanceof";
      *width = 1;
      return true;
    }
    if (t.kind != TokenKind::kOperator) return false;
    if (t.text == ">") {
      std::tie(*op, *width) = GreaterOperatorAt(pos_);
      return BinaryPrecedence(*op) > 0;
    }
    *op = t.text;
    *width = 1;
    return BinaryPrecedence(*op) > 0;
  }

  ExprId ParseBinary(int min_precedence) {
    const std::size_t begin = Cur().span.begin;
    ExprId lhs = ParseUnary();
    while (true) {
      std::string op;
      std::size_t width = 0;
      if (!PeekBinaryOperator(&op, &width)) break;
      const int precedence = BinaryPrecedence(op);
      if (precedence < min_precedence) break;
      const int op_line = Cur().line;
      pos_ += width;
      if (op == "instanceof") {
        ParseModifiers();
        const std::string type = ParseType();
        if (AtIdent()) Unsupported("instanceof patterns are not supported");
        const ExprId id = NewExpr(ExprKind::kInstanceOf, begin);
        u_.exprs[id].text = type;
        u_.exprs[id].operands = {lhs};
        lhs = FinishExpr(id);
        continue;
      }
      const ExprId rhs = ParseBinary(precedence + 1);
      const ExprId id = NewExpr(ExprKind::kBinary, begin);
      u_.exprs[id].op_line = op_line;
      u_.exprs[id].text = op;
      u_.exprs[id].operands = {lhs, rhs};
      lhs = FinishExpr(id);
    }
    return lhs;
  }

  bool CastAhead() {
    return Speculate([this] {
      Next();  // '('
      const bool primitive = IsPrimitive(Cur());
      if (!primitive && !AtIdent()) return false;
      ParseType();
      while (At("&")) {  // intersection cast
        Next();
        ParseType();
      }
      if (!At(")")) return false;
      if (primitive) return true;
      const Token& after = Peek(1);
      switch (after.kind) {
        case TokenKind::kIdent:
        case TokenKind::kStringLit:
        case TokenKind::kCharLit:
        case TokenKind::kNumLit:
          return true;
        case TokenKind::kKeyword:
          return after.text == "this" || after.text == "super" ||
                 after.text == "new" || after.text == "true" ||
                 after.text == "false" || after.text == "null" ||
                 after.text == "switch" || IsPrimitive(after);
        case TokenKind::kPunct:
          return after.text == "(";
        case TokenKind::kOperator:
          return after.text == "!" || after.text == "~";
        default:
          return false;
      }
    });
  }

  ExprId ParseUnary() {
    const std::size_t begin = Cur().span.begin;
    if (At("++") || At("--") || At("+") || At("-") || At("!") || At("~")) {
      const std::string op = Cur().text;
      Next();
      const ExprId operand = ParseUnary();
      const ExprId id = NewExpr(ExprKind::kUnary, begin);
      u_.exprs[id].text = op;
      u_.exprs[id].operands = {operand};
      return FinishExpr(id);
    }
    if (At("(") && !LambdaAhead() && CastAhead()) {
      Next();
      std::string type = ParseType();
      while (At("&")) {
        Next();
        type += "&" + ParseType();
      }
      Expect(")");
      const ExprId operand = LambdaAhead() ? ParseLambda() : ParseUnary();
      const ExprId id = NewExpr(ExprKind::kCast, begin);
      u_.exprs[id].text = type;
      u_.exprs[id].operands = {operand};
      return FinishExpr(id);
    }
    return ParsePostfix(ParsePrimary(), begin);
  }

  std::vector<ExprId> ParseArguments() {
    Expect("(");
    std::vector<ExprId> args;
    while (!At(")")) {
      args.push_back(ParseExpression());
      if (!At(",")) break;
      Next();
    }
    Expect(")");
    return args;
  }

  ExprId ParsePrimary() {
    const Token& t = Cur();
    const std::size_t begin = t.span.begin;
    auto literal = [&](LiteralKind kind) {
      const ExprId id = NewExpr(ExprKind::kLiteral, begin);
      u_.exprs[id].text = t.text;
      u_.exprs[id].literal = kind;
      Next();
      return FinishExpr(id);
    };
    switch (t.kind) {
      case TokenKind::kStringLit:
        return literal(LiteralKind::kString);
      case TokenKind::kCharLit:
        return literal(LiteralKind::kChar);
      case TokenKind::kNumLit:
        return literal(LiteralKind::kNumber);
      case TokenKind::kIdent: {
        if (PeekIs(1, "(")) {
          const ExprId id = NewExpr(ExprKind::kCall, begin);
          u_.exprs[id].text = t.text;
          Next();
          std::vector<ExprId> args = ParseArguments();
          u_.exprs[id].operands = std::move(args);
          return FinishExpr(id);
        }
        const ExprId id = NewExpr(ExprKind::kName, begin);
        u_.exprs[id].text = t.text;
        Next();
        return FinishExpr(id);
      }
      case TokenKind::kKeyword: {
        if (t.text == "true" || t.text == "false") {
          return literal(LiteralKind::kBoolean);
        }
        if (t.text == "null") return literal(LiteralKind::kNull);
        if (t.text == "this" || t.text == "super") {
          const bool is_this = t.text == "this";
          if (PeekIs(1, "(")) {
            const ExprId id = NewExpr(ExprKind::kCall, begin);
            u_.exprs[id].text = t.text;
            Next();
            std::vector<ExprId> args = ParseArguments();
            u_.exprs[id].operands = std::move(args);
            return FinishExpr(id);
          }
          const ExprId id =
              NewExpr(is_this ? ExprKind::kThis : ExprKind::kSuper, begin);
          u_.exprs[id].text = t.text;
          Next();
          return FinishExpr(id);
        }
        if (t.text == "new") return ParseNew();
        if (t.text == "switch") {
          Unsupported("switch expressions are not supported");
        }
        if (IsPrimitive(t)) {
          const ExprId id = NewExpr(ExprKind::kClassLit, begin);
          u_.exprs[id].text = ParseType();
          if (At("::")) {
            Next();
            Expect("new");
            u_.exprs[id].kind = ExprKind::kMethodRef;
            return FinishExpr(id);
          }
          Expect(".");
          Expect("class");
          return FinishExpr(id);
        }
        break;
      }
      case TokenKind::kPunct: {
        if (t.text == "(") {
          const ExprId id = NewExpr(ExprKind::kParen, begin);
          Next();
          const ExprId inner = ParseExpression();
          Expect(")");
          u_.exprs[id].operands = {inner};
          return FinishExpr(id);
        }
        break;
      }
      default:
        break;
    }
    Fail("expected an expression but found " + Describe(t));
  }

  ExprId ParseNew() {
    const std::size_t begin = Cur().span.begin;
    Expect("new");
    if (At("<")) SkipTypeArguments();
    const std::string type = ParseTypeNoDims();
    if (At("[")) {
      const ExprId id = NewExpr(ExprKind::kNewArray, begin);
      u_.exprs[id].text = type;
      while (At("[")) {
        Next();
        if (At("]")) {
          Next();
          continue;
        }
        const ExprId dim = ParseExpression();
        u_.exprs[id].operands.push_back(dim);
        Expect("]");
      }
      if (At("{")) {
        const ExprId init = ParseArrayInit();
        u_.exprs[id].operands.push_back(init);
      }
      return FinishExpr(id);
    }
    if (!At("(")) Fail("expected '(' or '[' after 'new " + type + "'");
    const ExprId id = NewExpr(ExprKind::kNew, begin);
    u_.exprs[id].text = type;
    std::vector<ExprId> args = ParseArguments();
    u_.exprs[id].operands = std::move(args);
    if (At("{")) Unsupported("anonymous classes are not supported");
    return FinishExpr(id);
  }

  ExprId ParsePostfix(ExprId e, std::size_t begin) {
    while (true) {
      if (At(".")) {
        Next();
        if (At("<")) SkipTypeArguments();
        if (At("new")) Unsupported("qualified inner-class creation is not supported");
        if (At("class")) {
          Next();
          const ExprId id = NewExpr(ExprKind::kClassLit, begin);
          u_.exprs[id].text = u_.text.substr(
              u_.exprs[e].span.begin, u_.exprs[e].span.size());
          e = FinishExpr(id);
          continue;
        }
        if (At("this")) {
          Next();
          const ExprId id = NewExpr(ExprKind::kThis, begin);
          u_.exprs[id].text = "this";
          u_.exprs[id].target = e;
          e = FinishExpr(id);
          continue;
        }
        const int name_line = Cur().line;
        const std::string name = ExpectIdent();
        if (At("(")) {
          const ExprId id = NewExpr(ExprKind::kCall, begin);
          u_.exprs[id].op_line = name_line;
          u_.exprs[id].text = name;
          u_.exprs[id].target = e;
          std::vector<ExprId> args = ParseArguments();
          u_.exprs[id].operands = std::move(args);
          e = FinishExpr(id);
        } else {
          const ExprId id = NewExpr(ExprKind::kFieldAccess, begin);
          u_.exprs[id].op_line = name_line;
          u_.exprs[id].text = name;
          u_.exprs[id].target = e;
          e = FinishExpr(id);
        }
        continue;
      }
      if (At("[")) {
        if (PeekIs(1, "]")) {  // array type: T[].class or T[]::new
          const std::string dims = ParseDims();
          const std::string base = u_.text.substr(u_.exprs[e].span.begin,
                                                  u_.exprs[e].span.size());
          if (At("::")) {
            Next();
            Expect("new");
            const ExprId id = NewExpr(ExprKind::kMethodRef, begin);
            u_.exprs[id].text = base + dims + "::new";
            return FinishExpr(id);
          }
          Expect(".");
          Expect("class");
          const ExprId id = NewExpr(ExprKind::kClassLit, begin);
          u_.exprs[id].text = base + dims;
          e = FinishExpr(id);
          continue;
        }
        Next();
        const ExprId index = ParseExpression();
        Expect("]");
        const ExprId id = NewExpr(ExprKind::kArrayAccess, begin);
        u_.exprs[id].target = e;
        u_.exprs[id].operands = {index};
        e = FinishExpr(id);
        continue;
      }
      if (At("++") || At("--")) {
        const ExprId id = NewExpr(ExprKind::kPostfix, begin);
        u_.exprs[id].text = Cur().text;
        u_.exprs[id].operands = {e};
        Next();
        e = FinishExpr(id);
        continue;
      }
      if (At("::")) {
        Next();
        const ExprId id = NewExpr(ExprKind::kMethodRef, begin);
        u_.exprs[id].target = e;
        if (At("new")) {
          u_.exprs[id].text = "new";
          Next();
        } else {
          u_.exprs[id].text = ExpectIdent();
        }
        e = FinishExpr(id);
        continue;
      }
      return e;
    }
  }

  SourceUnit& u_;
  std::vector<const Token*> toks_;
  Token eof_;
  std::size_t pos_ = 0;
  int current_body_ = -1;
  int current_stmt_ = -1;
  bool in_case_label_ = false;
};

}  // namespace

SourceUnit ParseSource(std::string text, std::string snippet_id) {
  SourceUnit unit;
  unit.snippet_id = std::move(snippet_id);
  unit.text = std::move(text);
  unit.line_table = BuildLineTable(unit.text);
  try {
    unit.tokens = Tokenize(unit.text);
  } catch (const Error& e) {
    unit.status.failure = ParseFailure::kLexical;
    unit.status.reason = e.what();
    unit.status.line = e.line();
    unit.status.column = e.column();
    return unit;
  }
  Parser parser(unit);
  try {
    parser.ParseCompilationUnit();
  } catch (const SyntaxFailure& failure) {
    const Token& at = parser.TokenAt(failure.token);
    unit.status.failure = failure.kind;
    unit.status.reason = failure.message;
    unit.status.line = at.line;
    unit.status.column = at.column;
    unit.statements.clear();
    unit.exprs.clear();
    unit.classes.clear();
    unit.bodies.clear();
    unit.methods.clear();
  }
  return unit;
}

SourceUnit ParseUnit(const Snippet& snippet) {
  return ParseSource(snippet.wrapped_text, snippet.id);
}

}  // namespace snipforge
