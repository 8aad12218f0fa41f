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

#include "snipforge/validity.h"

#include <array>
#include <optional>
#include <set>
#include <vector>

namespace snipforge {
namespace {

constexpr std::array<std::string_view, 7> kPackageRoots = {
    "java", "javax", "org", "com", "android", "sun", "jdk",
};

bool IsCapitalized(std::string_view name) {
  return !name.empty() && name.front() >= 'A' && name.front() <= 'Z';
}

class BodyChecker {
 public:
  BodyChecker(const SourceUnit& unit, const CodeBody& body) : u_(unit) {
    for (int c = body.class_index; c >= 0; c = u_.classes[c].outer) {
      for (const FieldDecl& f : u_.classes[c].fields) fields_.insert(f.name);
    }
    scopes_.emplace_back();
    for (const VarDecl& p : body.params) Declare(p);
    root_block_ = body.block;
  }

  std::optional<Validity> Run() {
    if (!failure_) Visit(root_block_);
    return failure_;
  }

 private:
  void Fail(ValidityReason reason, const std::string& name) {
    if (!failure_) failure_ = Validity::Invalid(reason, name);
  }

  void Declare(const VarDecl& decl) {
    if (decl.init != kNoExpr) CheckExpr(decl.init);
    if (!scopes_.back().insert(decl.name).second) {
      Fail(ValidityReason::kDuplicate, decl.name);
    }
  }

  bool Resolves(const std::string& name) const {
    if (IsCapitalized(name) || fields_.count(name) > 0) return true;
    for (const auto& scope : scopes_) {
      if (scope.count(name) > 0) return true;
    }
    return false;
  }

  void CheckName(const std::string& name) {
    if (!Resolves(name)) Fail(ValidityReason::kUndeclared, name);
  }

  // A name in qualifier position may also be a package or type.
  void CheckQualifier(ExprId id) {
    const Expr& e = u_.exprs[id];
    if (e.kind == ExprKind::kName) {
      for (std::string_view root : kPackageRoots) {
        if (e.text == root) return;
      }
      CheckName(e.text);
      return;
    }
    CheckExpr(id);
  }

  void CheckExpr(ExprId id) {
    if (failure_) return;
    const Expr& e = u_.exprs[id];
    switch (e.kind) {
      case ExprKind::kLambda:
      case ExprKind::kLiteral:
      case ExprKind::kClassLit:
      case ExprKind::kThis:
      case ExprKind::kSuper:
        return;
      case ExprKind::kName:
        CheckName(e.text);
        return;
      case ExprKind::kCall:
      case ExprKind::kFieldAccess:
      case ExprKind::kMethodRef:
        if (e.target != kNoExpr) CheckQualifier(e.target);
        break;
      default:
        if (e.target != kNoExpr) CheckExpr(e.target);
        break;
    }
    for (ExprId child : e.operands) CheckExpr(child);
  }

  void Visit(int id) {
    if (failure_) return;
    const StatementNode& s = u_.statements[id];
    const bool opens_scope =
        id != root_block_ &&
        (s.kind == StmtKind::kBlock || s.kind == StmtKind::kFor ||
         s.kind == StmtKind::kForeach || s.kind == StmtKind::kTry ||
         s.kind == StmtKind::kSwitch);
    if (opens_scope) scopes_.emplace_back();
    if (s.kind == StmtKind::kFor) {
      for (const VarDecl& d : s.decls) Declare(d);
      for (ExprId e : s.exprs) CheckExpr(e);
    } else {
      for (ExprId e : s.exprs) CheckExpr(e);
      for (const VarDecl& d : s.decls) Declare(d);
    }
    for (int child : s.children) Visit(child);
    if (opens_scope) scopes_.pop_back();
  }

  const SourceUnit& u_;
  std::set<std::string> fields_;
  std::vector<std::set<std::string>> scopes_;
  int root_block_ = -1;
  std::optional<Validity> failure_;
};

}  // namespace

std::string_view ValidityReasonName(ValidityReason reason) {
  switch (reason) {
    case ValidityReason::kNone:
      return "NONE";
    case ValidityReason::kParse:
      return "PARSE";
    case ValidityReason::kUndeclared:
      return "UNDECLARED";
    case ValidityReason::kDuplicate:
      return "DUPLICATE";
    case ValidityReason::kExternal:
      return "EXTERNAL";
  }
  return "UNKNOWN";
}

std::string Validity::ToString() const {
  if (valid()) return "VALID";
  std::string out = "INVALID(" + std::string(ValidityReasonName(reason));
  if (!detail.empty() && (reason == ValidityReason::kUndeclared ||
                          reason == ValidityReason::kDuplicate)) {
    out += ": " + detail;
  }
  return out + ")";
}

Validity CheckValidity(const SourceUnit& unit) {
  if (!unit.ok()) {
    return Validity::Invalid(ValidityReason::kParse, unit.status.reason);
  }
  for (const CodeBody& body : unit.bodies) {
    if (auto failure = BodyChecker(unit, body).Run()) return *failure;
  }
  return Validity::Valid();
}

Validity CheckValidity(std::string_view unit_text) {
  return CheckValidity(ParseSource(std::string(unit_text)));
}

}  // namespace snipforge
