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

#ifndef SNIPFORGE_SOURCE_UNIT_H_
#define SNIPFORGE_SOURCE_UNIT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snipforge/common.h"
#include "snipforge/snippet.h"
#include "snipforge/tokenizer.h"

namespace snipforge {

enum class StmtKind {
  kExprStmt,
  kLocalDecl,
  kIf,
  kFor,
  kForeach,
  kWhile,
  kDo,
  kSwitch,
  kSwitchCaseGroup,
  kReturn,
  kBreak,
  kContinue,
  kThrow,
  kTry,
  kBlock,
  kSyncBlock,
  kEmpty,
};

std::string_view StmtKindName(StmtKind kind);

inline bool IsLoop(StmtKind kind) {
  return kind == StmtKind::kFor || kind == StmtKind::kForeach ||
         kind == StmtKind::kWhile || kind == StmtKind::kDo;
}

using ExprId = int;
inline constexpr ExprId kNoExpr = -1;

// Expressions are parsed only as deeply as the rule catalog and the validity
// proxy need. Lambdas and method references keep their parameters as text.
enum class ExprKind {
  kLiteral,
  kName,
  kFieldAccess,   // target.text
  kCall,          // [target.]text(operands...)
  kNew,           // new text(operands...)
  kNewArray,      // new text[operands...] or new text[]{...}
  kArrayAccess,   // target[operands[0]]
  kUnary,         // text operands[0]   (prefix)
  kPostfix,       // operands[0] text
  kBinary,        // operands[0] text operands[1]
  kAssign,        // operands[0] text operands[1]
  kConditional,   // operands[0] ? operands[1] : operands[2]
  kCast,          // (text) operands[0]
  kInstanceOf,    // operands[0] instanceof text
  kLambda,        // text -> operands[0]
  kMethodRef,     // target::text
  kArrayInit,     // {operands...}
  kParen,         // (operands[0])
  kThis,
  kSuper,
  kClassLit,      // text.class
};

enum class LiteralKind { kNone, kString, kChar, kNumber, kBoolean, kNull };

struct Expr {
  ExprKind kind = ExprKind::kName;
  ByteRange span;
  int line = 0;
  int op_line = 0;  // line of the operator or member name; reporting line
  std::string text;
  LiteralKind literal = LiteralKind::kNone;
  ExprId target = kNoExpr;
  std::vector<ExprId> operands;
  ExprId parent = kNoExpr;
  int stmt = -1;  // owning statement id; -1 for field initializers
};

struct VarDecl {
  std::string name;
  std::string type;  // whitespace-free type text, e.g. "List<String>", "int[]"
  ByteRange name_span;
  int line = 0;
  ExprId init = kNoExpr;
};

struct StatementNode {
  int id = 0;
  StmtKind kind = StmtKind::kEmpty;
  ByteRange span;
  LineRange lines;
  std::optional<int> parent;
  std::vector<int> children;
  int body = -1;  // index into SourceUnit::bodies

  // Expressions owned directly by this statement (conditions, selectors,
  // for-updates, case labels are kept in `labels`).
  std::vector<ExprId> exprs;
  std::vector<ExprId> labels;
  // Variables this statement introduces: local declarators, for-init,
  // foreach variable, try resources, or (on a catch BLOCK) the catch
  // parameter.
  std::vector<VarDecl> decls;
};

struct FieldDecl {
  std::string type;
  std::string name;
  int line = 0;
  ByteRange span;
  ExprId init = kNoExpr;
  bool is_final = false;
  bool is_static = false;
};

struct ClassDecl {
  std::string name;
  ByteRange span;
  int outer = -1;
  std::vector<FieldDecl> fields;
};

enum class BodyKind { kMethod, kConstructor, kInitializer };

// Any brace-delimited executable body. Only kMethod bodies become
// MethodRegions (and therefore edit targets).
struct CodeBody {
  BodyKind kind = BodyKind::kMethod;
  std::string name;
  int class_index = -1;
  std::vector<VarDecl> params;
  int block = -1;   // statement id of the outermost BLOCK
  int method = -1;  // index into SourceUnit::methods, or -1
};

struct MethodRegion {
  std::string name;
  ByteRange signature_span;
  ByteRange body_span;
  LineRange body_line_range;
  std::vector<int> statement_ids;
  int body = -1;
};

enum class ParseFailure { kNone, kLexical, kSyntax, kUnsupported };

struct ParseStatus {
  ParseFailure failure = ParseFailure::kNone;
  std::string reason;
  int line = 0;
  int column = 0;

  bool ok() const { return failure == ParseFailure::kNone; }
};

struct SourceUnit {
  std::string snippet_id;
  std::string text;
  std::vector<Token> tokens;
  std::vector<ByteRange> line_table;  // line N -> line_table[N - 1]
  std::vector<StatementNode> statements;
  std::vector<Expr> exprs;
  std::vector<ClassDecl> classes;
  std::vector<CodeBody> bodies;
  std::vector<MethodRegion> methods;
  ParseStatus status;

  bool ok() const { return status.ok(); }
  int LineOf(std::size_t offset) const;
  int line_count() const { return static_cast<int>(line_table.size()); }
  // Line content without its terminator.
  std::string_view LineContent(int line) const;
  // Method region index that contains statement `id`, or -1.
  int MethodOf(int statement_id) const;
};

// Builds the line table: every byte, terminators included, belongs to
// exactly one line.
std::vector<ByteRange> BuildLineTable(std::string_view text);

// Total: never throws. Failures are reported through SourceUnit::status with
// the location of the first error, and leave the tree empty.
SourceUnit ParseSource(std::string text, std::string snippet_id = "");
SourceUnit ParseUnit(const Snippet& snippet);

// Debug dump: [{id, kind, line_range, children}] in id order.
std::string StatementTreeToJson(const SourceUnit& unit);

}  // namespace snipforge

#endif  // SNIPFORGE_SOURCE_UNIT_H_
