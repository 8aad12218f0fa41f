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

#include "snipforge/rules.h"

#include <algorithm>
#include <cctype>
#include <functional>

#include "snipforge/tokenizer.h"

namespace snipforge {

const std::array<RuleId, kRuleCount> kAllRules = {
    RuleId::kUseStringBufferForStringAppends,
    RuleId::kAddEmptyString,
    RuleId::kAppendCharacterWithChar,
    RuleId::kRedundantFieldInitializer,
    RuleId::kAvoidInstantiatingObjectsInLoops,
    RuleId::kAvoidArrayLoops,
    RuleId::kUseIndexOfChar,
    RuleId::kStringInstantiation,
    RuleId::kInefficientStringBuffering,
    RuleId::kAvoidUsingShortType,
    RuleId::kTooFewBranchesForASwitchStatement,
    RuleId::kIntegerInstantiation,
    RuleId::kUselessStringValueOf,
    RuleId::kConsecutiveAppendsShouldReuse,
    RuleId::kInefficientEmptyStringCheck,
    RuleId::kStringToString,
    RuleId::kInsufficientStringBufferDeclaration,
    RuleId::kSimplifyStartsWith,
    RuleId::kConsecutiveLiteralAppends,
    RuleId::kOptimizableToArrayCall,
    RuleId::kBooleanInstantiation,
};

namespace {

struct RuleInfo {
  std::string_view name;
  std::string_view description;
};

RuleInfo Info(RuleId rule) {
  switch (rule) {
    case RuleId::kUseStringBufferForStringAppends:
      return {"UseStringBufferForStringAppends",
              "Prefer StringBuilder (non-synchronized) or StringBuffer "
              "(synchronized) over += for concatenating strings."};
    case RuleId::kAddEmptyString:
      return {"AddEmptyString", "Do not add empty strings."};
    case RuleId::kAppendCharacterWithChar:
      return {"AppendCharacterWithChar",
              "Avoid appending characters as strings in StringBuffer.append."};
    case RuleId::kRedundantFieldInitializer:
      return {"RedundantFieldInitializer",
              "Avoid using redundant field initializer for <name>."};
    case RuleId::kAvoidInstantiatingObjectsInLoops:
      return {"AvoidInstantiatingObjectsInLoops",
              "Avoid instantiating new objects inside loops."};
    case RuleId::kAvoidArrayLoops:
      return {"AvoidArrayLoops", "System.arraycopy is more efficient."};
    case RuleId::kUseIndexOfChar:
      return {"UseIndexOfChar",
              "String.indexOf(char) is faster than String.indexOf(String)."};
    case RuleId::kStringInstantiation:
      return {"StringInstantiation",
              "Avoid instantiating String objects; this is usually "
              "unnecessary."};
    case RuleId::kInefficientStringBuffering:
      return {"InefficientStringBuffering",
              "Avoid concatenating nonliterals in a StringBuffer/StringBuilder "
              "constructor or append()."};
    case RuleId::kAvoidUsingShortType:
      return {"AvoidUsingShortType", "Do not use the short type."};
    case RuleId::kTooFewBranchesForASwitchStatement:
      return {"TooFewBranchesForASwitchStatement",
              "A switch with less than three branches is inefficient, use a "
              "if statement instead."};
    case RuleId::kIntegerInstantiation:
      return {"IntegerInstantiation",
              "Avoid instantiating Integer objects. Call Integer.valueOf() "
              "instead."};
    case RuleId::kUselessStringValueOf:
      return {"UselessStringValueOf",
              "No need to call String.valueOf to append to a string."};
    case RuleId::kConsecutiveAppendsShouldReuse:
      return {"ConsecutiveAppendsShouldReuse",
              "StringBuffer (or StringBuilder).append is called consecutively "
              "without reusing the target variable."};
    case RuleId::kInefficientEmptyStringCheck:
      return {"InefficientEmptyStringCheck",
              "String.trim().length() == 0 / String.trim().isEmpty() is an "
              "inefficient way to validate a blank String."};
    case RuleId::kStringToString:
      return {"StringToString",
              "Avoid calling toString() on String objects; this is "
              "unnecessary."};
    case RuleId::kInsufficientStringBufferDeclaration:
      return {"InsufficientStringBufferDeclaration",
              "<type> has been initialized with size <capacity>, but has at "
              "least <length> characters appended."};
    case RuleId::kSimplifyStartsWith:
      return {"SimplifyStartsWith",
              "This call to String.startsWith can be rewritten using "
              "String.charAt(0)."};
    case RuleId::kConsecutiveLiteralAppends:
      return {"ConsecutiveLiteralAppends",
              "StringBuffer (or StringBuilder).append is called <count> "
              "consecutive times with literals."};
    case RuleId::kOptimizableToArrayCall:
      return {"OptimizableToArrayCall",
              "This call to Collection.toArray() may be optimizable."};
    case RuleId::kBooleanInstantiation:
      return {"BooleanInstantiation",
              "Avoid instantiating Boolean objects; reference "
              "Boolean.TRUE/Boolean.FALSE or call Boolean.valueOf() instead."};
  }
  return {"Unknown", ""};
}

bool IsPrimitiveType(std::string_view type) {
  return type == "byte" || type == "short" || type == "int" ||
         type == "long" || type == "float" || type == "double" ||
         type == "char" || type == "boolean";
}

bool IsStringTypeName(std::string_view type) {
  return type == "String" || type == "java.lang.String";
}

bool IsBuilderTypeName(std::string_view type) {
  return type == "StringBuilder" || type == "StringBuffer" ||
         type == "java.lang.StringBuilder" || type == "java.lang.StringBuffer";
}

bool IsZeroNumber(std::string text) {
  text.erase(std::remove(text.begin(), text.end(), '_'), text.end());
  for (char& c : text) c = static_cast<char>(std::tolower(c));
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'b')) {
    std::string digits = text.substr(2);
    if (!digits.empty() && digits.back() == 'l') digits.pop_back();
    return !digits.empty() &&
           digits.find_first_not_of('0') == std::string::npos;
  }
  if (!text.empty() &&
      (text.back() == 'l' || text.back() == 'f' || text.back() == 'd')) {
    text.pop_back();
  }
  const std::size_t exp = text.find('e');
  if (exp != std::string::npos) text = text.substr(0, exp);
  return text.find('0') != std::string::npos &&
         text.find_first_not_of("0.") == std::string::npos;
}

bool IsNulCharLiteral(std::string_view text) {
  return text == "'\\u0000'" || text == "'\\0'" || text == "'\\00'" ||
         text == "'\\000'";
}

class Matcher {
 public:
  explicit Matcher(const SourceUnit& unit) : u_(unit) {}

  std::vector<Violation> Run(RuleId rule) {
    out_.clear();
    switch (rule) {
      case RuleId::kUseStringBufferForStringAppends:
        UseStringBufferForStringAppends();
        break;
      case RuleId::kAddEmptyString:
        AddEmptyString();
        break;
      case RuleId::kAppendCharacterWithChar:
        ForEachCall("append", [&](const Expr& call) {
          if (call.operands.size() == 1 &&
              StringLiteralLength(call.operands[0]) == 1) {
            Report(rule, call.op_line);
          }
        });
        break;
      case RuleId::kRedundantFieldInitializer:
        RedundantFieldInitializer();
        break;
      case RuleId::kAvoidInstantiatingObjectsInLoops:
        for (const Expr& e : u_.exprs) {
          if (e.kind == ExprKind::kNew && InLoop(e.stmt)) Report(rule, e.line);
        }
        break;
      case RuleId::kAvoidArrayLoops:
        AvoidArrayLoops();
        break;
      case RuleId::kUseIndexOfChar:
        for (const Expr& e : u_.exprs) {
          if (e.kind == ExprKind::kCall &&
              (e.text == "indexOf" || e.text == "lastIndexOf") &&
              !e.operands.empty() && e.operands.size() <= 2 &&
              StringLiteralLength(e.operands[0]) == 1) {
            Report(rule, e.op_line);
          }
        }
        break;
      case RuleId::kStringInstantiation:
        for (const Expr& e : u_.exprs) {
          if (e.kind == ExprKind::kNew && IsStringTypeName(e.text) &&
              (e.operands.empty() ||
               (e.operands.size() == 1 && IsStringTyped(e.operands[0])))) {
            Report(rule, e.line);
          }
        }
        break;
      case RuleId::kInefficientStringBuffering:
        InefficientStringBuffering();
        break;
      case RuleId::kAvoidUsingShortType:
        AvoidUsingShortType();
        break;
      case RuleId::kTooFewBranchesForASwitchStatement:
        for (const StatementNode& s : u_.statements) {
          if (s.kind == StmtKind::kSwitch && s.children.size() < 3) {
            Report(rule, s.lines.first);
          }
        }
        break;
      case RuleId::kIntegerInstantiation:
        for (const Expr& e : u_.exprs) {
          if (e.kind == ExprKind::kNew &&
              (e.text == "Integer" || e.text == "java.lang.Integer")) {
            Report(rule, e.line);
          }
        }
        break;
      case RuleId::kUselessStringValueOf:
        UselessStringValueOf();
        break;
      case RuleId::kConsecutiveAppendsShouldReuse:
        ConsecutiveAppendsShouldReuse();
        break;
      case RuleId::kInefficientEmptyStringCheck:
        InefficientEmptyStringCheck();
        break;
      case RuleId::kStringToString:
        ForEachCall("toString", [&](const Expr& call) {
          if (call.operands.empty() && call.target != kNoExpr &&
              IsStringTyped(call.target)) {
            Report(rule, call.op_line);
          }
        });
        break;
      case RuleId::kInsufficientStringBufferDeclaration:
        InsufficientStringBufferDeclaration();
        break;
      case RuleId::kSimplifyStartsWith:
        ForEachCall("startsWith", [&](const Expr& call) {
          if (call.operands.size() == 1 &&
              StringLiteralLength(call.operands[0]) == 1) {
            Report(rule, call.op_line);
          }
        });
        break;
      case RuleId::kConsecutiveLiteralAppends:
        ConsecutiveLiteralAppends();
        break;
      case RuleId::kOptimizableToArrayCall:
        ForEachCall("toArray", [&](const Expr& call) {
          if (call.operands.size() != 1) return;
          const Expr& arg = E(call.operands[0]);
          if (arg.kind == ExprKind::kNewArray && arg.operands.size() == 1 &&
              E(arg.operands[0]).literal == LiteralKind::kNumber &&
              IsZeroNumber(E(arg.operands[0]).text)) {
            Report(rule, call.op_line);
          }
        });
        break;
      case RuleId::kBooleanInstantiation:
        BooleanInstantiation();
        break;
    }
    return std::move(out_);
  }

 private:
  const Expr& E(ExprId id) const { return u_.exprs[id]; }

  void Report(RuleId rule, int line, std::string message = "") {
    if (message.empty()) message = std::string(Info(rule).description);
    out_.push_back({rule, line, std::move(message)});
  }

  void ForEachCall(std::string_view name,
                   const std::function<void(const Expr&)>& fn) {
    for (const Expr& e : u_.exprs) {
      if (e.kind == ExprKind::kCall && e.text == name) fn(e);
    }
  }

  ExprId StripParens(ExprId id) const {
    while (id != kNoExpr && E(id).kind == ExprKind::kParen) {
      id = E(id).operands[0];
    }
    return id;
  }

  // Decoded length of a string literal expression, or -1.
  long StringLiteralLength(ExprId id) const {
    if (id == kNoExpr || E(id).literal != LiteralKind::kString) return -1;
    return static_cast<long>(DecodedLiteralLength(E(id).text));
  }

  bool IsCallNamed(ExprId id, std::string_view name, std::size_t args) const {
    return id != kNoExpr && E(id).kind == ExprKind::kCall &&
           E(id).text == name && E(id).operands.size() == args;
  }

  bool IsNameExpr(ExprId id, std::string_view a, std::string_view b) const {
    return id != kNoExpr && E(id).kind == ExprKind::kName &&
           (E(id).text == a || E(id).text == b);
  }

  // Qualifier `String`, `Boolean`, ... or its java.lang. spelling.
  bool IsTypeQualifier(ExprId id, std::string_view simple) const {
    if (id == kNoExpr) return false;
    const Expr& e = E(id);
    if (e.kind == ExprKind::kName) return e.text == simple;
    if (e.kind != ExprKind::kFieldAccess || e.text != simple) return false;
    const std::string_view text(u_.text.data() + e.span.begin, e.span.size());
    std::string compact;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    }
    return compact == "java.lang." + std::string(simple);
  }

  bool InLoop(int stmt) const {
    while (stmt >= 0) {
      const StatementNode& s = u_.statements[stmt];
      if (IsLoop(s.kind)) return true;
      if (!s.parent) return false;
      stmt = *s.parent;
    }
    return false;
  }

  const FieldDecl* FindField(int class_index, std::string_view name) const {
    for (int c = class_index; c >= 0; c = u_.classes[c].outer) {
      for (const FieldDecl& f : u_.classes[c].fields) {
        if (f.name == name) return &f;
      }
    }
    return nullptr;
  }

  const FieldDecl* FindFieldAnywhere(std::string_view name) const {
    for (const ClassDecl& c : u_.classes) {
      for (const FieldDecl& f : c.fields) {
        if (f.name == name) return &f;
      }
    }
    return nullptr;
  }

  // Declared type of a simple name used at `offset` in statement `stmt`:
  // innermost visible local, then parameters, then fields of the enclosing
  // classes.
  std::optional<std::string> TypeOfName(std::string_view name, int stmt,
                                        std::size_t offset) const {
    if (stmt < 0) {
      if (const FieldDecl* f = FindFieldAnywhere(name)) return f->type;
      return std::nullopt;
    }
    const int body = u_.statements[stmt].body;
    const VarDecl* best = nullptr;
    std::size_t best_begin = 0;
    for (const StatementNode& s : u_.statements) {
      if (s.body != body) continue;
      for (const VarDecl& d : s.decls) {
        if (d.name != name) continue;
        ByteRange scope = s.span;
        if (s.kind == StmtKind::kLocalDecl) {
          scope = s.parent ? u_.statements[*s.parent].span : s.span;
          scope.begin = d.name_span.begin;
        }
        if (!scope.Contains(ByteRange{offset, offset})) continue;
        if (!best || scope.begin >= best_begin) {
          best = &d;
          best_begin = scope.begin;
        }
      }
    }
    if (best) return best->type;
    if (body >= 0) {
      const CodeBody& code = u_.bodies[body];
      for (const VarDecl& p : code.params) {
        if (p.name == name) return p.type;
      }
      if (const FieldDecl* f = FindField(code.class_index, name)) {
        return f->type;
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> DeclaredType(ExprId id) const {
    id = StripParens(id);
    if (id == kNoExpr) return std::nullopt;
    const Expr& e = E(id);
    if (e.kind == ExprKind::kName) {
      return TypeOfName(e.text, e.stmt, e.span.begin);
    }
    if (e.kind == ExprKind::kFieldAccess && e.target != kNoExpr &&
        E(e.target).kind == ExprKind::kThis && E(e.target).target == kNoExpr) {
      const FieldDecl* f = nullptr;
      if (e.stmt >= 0 && u_.statements[e.stmt].body >= 0) {
        f = FindField(u_.bodies[u_.statements[e.stmt].body].class_index,
                      e.text);
      } else {
        f = FindFieldAnywhere(e.text);
      }
      if (f) return f->type;
    }
    return std::nullopt;
  }

  bool IsStringTyped(ExprId id) const {
    id = StripParens(id);
    if (id == kNoExpr) return false;
    const Expr& e = E(id);
    if (e.literal == LiteralKind::kString) return true;
    if (e.kind == ExprKind::kBinary && e.text == "+") {
      return IsStringTyped(e.operands[0]) || IsStringTyped(e.operands[1]);
    }
    const std::optional<std::string> type = DeclaredType(id);
    return type && IsStringTypeName(*type);
  }

  // For `x.append(a).append(b)` returns the append calls innermost first and
  // sets *root to the Name `x`. Empty when the chain has another shape.
  std::vector<ExprId> AppendChain(ExprId top, ExprId* root) const {
    std::vector<ExprId> chain;
    ExprId e = top;
    while (e != kNoExpr && E(e).kind == ExprKind::kCall &&
           E(e).text == "append") {
      chain.push_back(e);
      e = E(e).target;
    }
    if (chain.empty() || e == kNoExpr || E(e).kind != ExprKind::kName) {
      return {};
    }
    *root = e;
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  // Statement-level append chain: `x.append(...)...;`.
  std::vector<ExprId> StatementAppendChain(const StatementNode& s,
                                           std::string* receiver) const {
    if (s.kind != StmtKind::kExprStmt || s.exprs.empty()) return {};
    ExprId root = kNoExpr;
    std::vector<ExprId> chain = AppendChain(s.exprs[0], &root);
    if (!chain.empty()) *receiver = E(root).text;
    return chain;
  }

  bool IsConcatOperand(ExprId id) const {
    const Expr& e = E(id);
    if (e.parent == kNoExpr) return false;
    const Expr& p = E(e.parent);
    if (p.kind == ExprKind::kBinary && p.text == "+") return true;
    return p.kind == ExprKind::kAssign && p.text == "+=" &&
           p.operands[1] == id;
  }

  void UseStringBufferForStringAppends() {
    for (const Expr& e : u_.exprs) {
      if (e.kind != ExprKind::kAssign || e.text != "+=") continue;
      const ExprId lhs = StripParens(e.operands[0]);
      const Expr& l = E(lhs);
      if (l.kind != ExprKind::kName && l.kind != ExprKind::kFieldAccess) {
        continue;
      }
      const std::optional<std::string> type = DeclaredType(lhs);
      if (type && IsStringTypeName(*type)) {
        Report(RuleId::kUseStringBufferForStringAppends, e.line);
      }
    }
  }

  void AddEmptyString() {
    for (std::size_t i = 0; i < u_.exprs.size(); ++i) {
      const Expr& e = u_.exprs[i];
      if (e.literal == LiteralKind::kString && e.text == "\"\"" &&
          IsConcatOperand(static_cast<ExprId>(i))) {
        Report(RuleId::kAddEmptyString, e.line);
      }
    }
  }

  void RedundantFieldInitializer() {
    for (const ClassDecl& c : u_.classes) {
      for (const FieldDecl& f : c.fields) {
        if (f.init == kNoExpr || f.is_final) continue;
        const Expr& init = E(f.init);
        bool redundant = false;
        if (f.type == "boolean") {
          redundant = init.literal == LiteralKind::kBoolean &&
                      init.text == "false";
        } else if (IsPrimitiveType(f.type)) {
          redundant = (init.literal == LiteralKind::kNumber &&
                       IsZeroNumber(init.text)) ||
                      (init.literal == LiteralKind::kChar &&
                       IsNulCharLiteral(init.text));
        } else {
          redundant = init.literal == LiteralKind::kNull;
        }
        if (redundant) {
          Report(RuleId::kRedundantFieldInitializer, f.line,
                 "Avoid using redundant field initializer for " + f.name +
                     ".");
        }
      }
    }
  }

  bool IsArrayCopy(ExprId id) const {
    const Expr& e = E(id);
    return e.kind == ExprKind::kAssign && e.text == "=" &&
           E(StripParens(e.operands[0])).kind == ExprKind::kArrayAccess &&
           E(StripParens(e.operands[1])).kind == ExprKind::kArrayAccess;
  }

  bool IsIndexStep(ExprId id) const {
    const Expr& e = E(id);
    if ((e.kind == ExprKind::kPostfix || e.kind == ExprKind::kUnary) &&
        (e.text == "++" || e.text == "--")) {
      return E(e.operands[0]).kind == ExprKind::kName;
    }
    return e.kind == ExprKind::kAssign && (e.text == "+=" || e.text == "-=") &&
           E(e.operands[0]).kind == ExprKind::kName;
  }

  void AvoidArrayLoops() {
    for (const StatementNode& loop : u_.statements) {
      if (loop.kind != StmtKind::kFor && loop.kind != StmtKind::kWhile &&
          loop.kind != StmtKind::kDo) {
        continue;
      }
      if (loop.children.empty()) continue;
      const StatementNode& body = u_.statements[loop.children.front()];
      if (body.kind != StmtKind::kBlock || body.children.empty()) continue;
      bool copies = false;
      bool only = true;
      for (int child : body.children) {
        const StatementNode& s = u_.statements[child];
        if (s.kind != StmtKind::kExprStmt) {
          only = false;
          break;
        }
        if (IsArrayCopy(s.exprs[0])) {
          copies = true;
        } else if (!IsIndexStep(s.exprs[0])) {
          only = false;
          break;
        }
      }
      if (only && copies) Report(RuleId::kAvoidArrayLoops, loop.lines.first);
    }
  }

  // A `+` chain mixing a string with at least one non-literal operand.
  bool IsNonLiteralConcat(ExprId id) const {
    id = StripParens(id);
    const Expr& e = E(id);
    if (e.kind != ExprKind::kBinary || e.text != "+") return false;
    std::vector<ExprId> operands;
    std::function<void(ExprId)> flatten = [&](ExprId x) {
      x = StripParens(x);
      if (E(x).kind == ExprKind::kBinary && E(x).text == "+") {
        flatten(E(x).operands[0]);
        flatten(E(x).operands[1]);
      } else {
        operands.push_back(x);
      }
    };
    flatten(id);
    bool non_literal = false;
    bool stringy = false;
    for (ExprId x : operands) {
      if (E(x).kind != ExprKind::kLiteral) non_literal = true;
      if (IsStringTyped(x)) stringy = true;
    }
    return non_literal && stringy;
  }

  void InefficientStringBuffering() {
    for (const Expr& e : u_.exprs) {
      if (e.kind == ExprKind::kNew && IsBuilderTypeName(e.text) &&
          e.operands.size() == 1 && IsNonLiteralConcat(e.operands[0])) {
        Report(RuleId::kInefficientStringBuffering, e.line);
      } else if (e.kind == ExprKind::kCall && e.text == "append" &&
                 e.target != kNoExpr && e.operands.size() == 1 &&
                 IsNonLiteralConcat(e.operands[0])) {
        Report(RuleId::kInefficientStringBuffering, e.op_line);
      }
    }
  }

  void AvoidUsingShortType() {
    std::vector<ByteRange> cast_types;
    for (const Expr& e : u_.exprs) {
      if (e.kind == ExprKind::kCast) {
        cast_types.push_back({e.span.begin, E(e.operands[0]).span.begin});
      }
    }
    for (const Token& t : u_.tokens) {
      if (t.kind != TokenKind::kKeyword || t.text != "short") continue;
      const bool in_cast =
          std::any_of(cast_types.begin(), cast_types.end(),
                      [&](const ByteRange& r) { return r.Contains(t.span); });
      if (!in_cast) Report(RuleId::kAvoidUsingShortType, t.line);
    }
  }

  void UselessStringValueOf() {
    for (std::size_t i = 0; i < u_.exprs.size(); ++i) {
      const Expr& e = u_.exprs[i];
      if (e.kind == ExprKind::kCall && e.text == "valueOf" &&
          e.operands.size() == 1 && IsTypeQualifier(e.target, "String") &&
          IsConcatOperand(static_cast<ExprId>(i))) {
        Report(RuleId::kUselessStringValueOf, e.op_line);
      }
    }
  }

  template <typename Fn>
  void ForEachStatementSequence(Fn fn) {
    for (const StatementNode& s : u_.statements) {
      if (s.kind == StmtKind::kBlock || s.kind == StmtKind::kSwitchCaseGroup) {
        fn(s.children);
      }
    }
  }

  void ConsecutiveAppendsShouldReuse() {
    ForEachStatementSequence([&](const std::vector<int>& seq) {
      std::string previous;
      for (int id : seq) {
        std::string receiver;
        const StatementNode& s = u_.statements[id];
        if (StatementAppendChain(s, &receiver).empty()) {
          previous.clear();
          continue;
        }
        if (receiver == previous) {
          Report(RuleId::kConsecutiveAppendsShouldReuse, s.lines.first);
        }
        previous = receiver;
      }
    });
  }

  void InefficientEmptyStringCheck() {
    for (const Expr& e : u_.exprs) {
      if (e.kind == ExprKind::kCall && e.text == "isEmpty" &&
          e.operands.empty() && IsCallNamed(e.target, "trim", 0)) {
        Report(RuleId::kInefficientEmptyStringCheck, E(e.target).op_line);
        continue;
      }
      if (e.kind != ExprKind::kBinary || (e.text != "==" && e.text != "!=")) {
        continue;
      }
      for (int side = 0; side < 2; ++side) {
        const ExprId call = StripParens(e.operands[side]);
        const Expr& other = E(StripParens(e.operands[1 - side]));
        if (IsCallNamed(call, "length", 0) &&
            IsCallNamed(E(call).target, "trim", 0) &&
            other.literal == LiteralKind::kNumber && IsZeroNumber(other.text)) {
          Report(RuleId::kInefficientEmptyStringCheck,
                 E(E(call).target).op_line);
          break;
        }
      }
    }
  }

  void InsufficientStringBufferDeclaration() {
    for (const StatementNode& s : u_.statements) {
      if (s.kind != StmtKind::kLocalDecl) continue;
      for (const VarDecl& d : s.decls) {
        if (!IsBuilderTypeName(d.type) || d.init == kNoExpr) continue;
        const Expr& init = E(d.init);
        if (init.kind != ExprKind::kNew || !IsBuilderTypeName(init.text)) {
          continue;
        }
        long capacity = 16;
        long length = 0;
        if (init.operands.size() == 1) {
          const Expr& arg = E(init.operands[0]);
          if (arg.literal == LiteralKind::kString) {
            length = StringLiteralLength(init.operands[0]);
            capacity = length + 16;
          } else if (arg.literal == LiteralKind::kNumber &&
                     arg.text.find_first_not_of("0123456789_") ==
                         std::string::npos) {
            std::string digits = arg.text;
            digits.erase(std::remove(digits.begin(), digits.end(), '_'),
                         digits.end());
            capacity = std::stol(digits);
          } else {
            continue;
          }
        } else if (!init.operands.empty()) {
          continue;
        }
        const ByteRange scope =
            s.parent ? u_.statements[*s.parent].span : s.span;
        for (const Expr& e : u_.exprs) {
          if (e.kind != ExprKind::kCall || e.text != "append" ||
              e.operands.size() != 1 || e.span.begin < s.span.end ||
              !scope.Contains(e.span)) {
            continue;
          }
          ExprId root = kNoExpr;
          const ExprId base = static_cast<ExprId>(&e - u_.exprs.data());
          if (AppendChain(base, &root).empty() || E(root).text != d.name) {
            continue;
          }
          const Expr& arg = E(e.operands[0]);
          if (arg.literal == LiteralKind::kString) {
            length += StringLiteralLength(e.operands[0]);
          } else if (arg.literal == LiteralKind::kChar) {
            length += 1;
          }
        }
        if (length > capacity) {
          const std::string type =
              init.text.substr(init.text.rfind('.') == std::string::npos
                                   ? 0
                                   : init.text.rfind('.') + 1);
          Report(RuleId::kInsufficientStringBufferDeclaration, d.line,
                 type + " has been initialized with size " +
                     std::to_string(capacity) + ", but has at least " +
                     std::to_string(length) + " characters appended.");
        }
      }
    }
  }

  void ConsecutiveLiteralAppends() {
    ForEachStatementSequence([&](const std::vector<int>& seq) {
      std::string receiver;
      int run = 0;
      int run_line = 0;
      auto flush = [&] {
        if (run >= 2) {
          Report(RuleId::kConsecutiveLiteralAppends, run_line,
                 "StringBuffer (or StringBuilder).append is called " +
                     std::to_string(run) + " consecutive times with literals.");
        }
        run = 0;
      };
      for (int id : seq) {
        std::string current;
        const std::vector<ExprId> chain =
            StatementAppendChain(u_.statements[id], &current);
        if (chain.empty() || current != receiver) {
          flush();
          receiver = chain.empty() ? "" : current;
        }
        for (ExprId call : chain) {
          const Expr& c = E(call);
          const bool literal = c.operands.size() == 1 &&
                               E(c.operands[0]).kind == ExprKind::kLiteral &&
                               E(c.operands[0]).literal != LiteralKind::kNull;
          if (!literal) {
            flush();
            continue;
          }
          if (run == 0) run_line = c.op_line;
          ++run;
        }
      }
      flush();
    });
  }

  void BooleanInstantiation() {
    for (const Expr& e : u_.exprs) {
      if (e.kind == ExprKind::kNew &&
          (e.text == "Boolean" || e.text == "java.lang.Boolean")) {
        Report(RuleId::kBooleanInstantiation, e.line);
      } else if (e.kind == ExprKind::kCall && e.text == "valueOf" &&
                 e.operands.size() == 1 &&
                 IsTypeQualifier(e.target, "Boolean") &&
                 E(e.operands[0]).literal == LiteralKind::kBoolean) {
        Report(RuleId::kBooleanInstantiation, e.op_line);
      }
    }
  }

  const SourceUnit& u_;
  std::vector<Violation> out_;
};

}  // namespace

std::string_view RuleName(RuleId rule) { return Info(rule).name; }

std::string_view RuleDescription(RuleId rule) { return Info(rule).description; }

std::optional<RuleId> RuleFromName(std::string_view name) {
  for (RuleId rule : kAllRules) {
    if (RuleName(rule) == name) return rule;
  }
  return std::nullopt;
}

bool ViolationLess(const Violation& a, const Violation& b) {
  if (a.line != b.line) return a.line < b.line;
  const std::string_view an = RuleName(a.rule);
  const std::string_view bn = RuleName(b.rule);
  if (an != bn) return an < bn;
  return a.message < b.message;
}

std::vector<Violation> EvaluateRule(RuleId rule, const SourceUnit& unit) {
  if (!unit.ok()) return {};
  std::vector<Violation> found = Matcher(unit).Run(rule);
  std::stable_sort(found.begin(), found.end(), ViolationLess);
  return found;
}

std::optional<std::vector<Violation>> Analyze(const SourceUnit& unit) {
  if (!unit.ok()) return std::nullopt;
  Matcher matcher(unit);
  std::vector<Violation> all;
  for (RuleId rule : kAllRules) {
    std::vector<Violation> found = matcher.Run(rule);
    all.insert(all.end(), found.begin(), found.end());
  }
  std::stable_sort(all.begin(), all.end(), ViolationLess);
  return all;
}

}  // namespace snipforge
