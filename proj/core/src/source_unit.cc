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

#include "snipforge/source_unit.h"

namespace snipforge {

std::string_view StmtKindName(StmtKind kind) {
  switch (kind) {
    case StmtKind::kExprStmt:
      return "EXPR_STMT";
    case StmtKind::kLocalDecl:
      return "LOCAL_DECL";
    case StmtKind::kIf:
      return "IF";
    case StmtKind::kFor:
      return "FOR";
    case StmtKind::kForeach:
      return "FOREACH";
    case StmtKind::kWhile:
      return "WHILE";
    case StmtKind::kDo:
      return "DO";
    case StmtKind::kSwitch:
      return "SWITCH";
    case StmtKind::kSwitchCaseGroup:
      return "SWITCH_CASE_GROUP";
    case StmtKind::kReturn:
      return "RETURN";
    case StmtKind::kBreak:
      return "BREAK";
    case StmtKind::kContinue:
      return "CONTINUE";
    case StmtKind::kThrow:
      return "THROW";
    case StmtKind::kTry:
      return "TRY";
    case StmtKind::kBlock:
      return "BLOCK";
    case StmtKind::kSyncBlock:
      return "SYNC_BLOCK";
    case StmtKind::kEmpty:
      return "EMPTY";
  }
  return "UNKNOWN";
}

std::vector<ByteRange> BuildLineTable(std::string_view text) {
  std::vector<ByteRange> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      lines.push_back({start, i + 1});
      start = i + 1;
    }
  }
  if (start < text.size()) lines.push_back({start, text.size()});
  return lines;
}

int SourceUnit::LineOf(std::size_t offset) const {
  if (line_table.empty()) return 1;
  auto it = std::upper_bound(
      line_table.begin(), line_table.end(), offset,
      [](std::size_t off, const ByteRange& line) { return off < line.end; });
  if (it == line_table.end()) return static_cast<int>(line_table.size());
  return static_cast<int>(it - line_table.begin()) + 1;
}

std::string_view SourceUnit::LineContent(int line) const {
  const ByteRange& range = line_table.at(static_cast<std::size_t>(line - 1));
  std::string_view content(text.data() + range.begin, range.size());
  if (!content.empty() && content.back() == '\n') content.remove_suffix(1);
  if (!content.empty() && content.back() == '\r') content.remove_suffix(1);
  return content;
}

int SourceUnit::MethodOf(int statement_id) const {
  if (statement_id < 0 || statement_id >= static_cast<int>(statements.size())) {
    return -1;
  }
  const int body = statements[statement_id].body;
  return body < 0 ? -1 : bodies[body].method;
}

}  // namespace snipforge
