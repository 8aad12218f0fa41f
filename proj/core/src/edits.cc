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

#include "snipforge/edits.h"

#include <algorithm>
#include <cctype>
#include <set>

namespace snipforge {
namespace {

struct Replacement {
  ByteRange range;
  std::string text;
};

std::string Splice(std::string_view text, std::vector<Replacement> edits) {
  std::sort(edits.begin(), edits.end(),
            [](const Replacement& a, const Replacement& b) {
              return a.range.begin > b.range.begin;
            });
  std::string out(text);
  for (const Replacement& r : edits) {
    out.replace(r.range.begin, r.range.size(), r.text);
  }
  return out;
}

bool IsBlank(unsigned char c) { return std::isspace(c) != 0; }

// Returns method index of `line` if it is a line target, else -1.
int LineTargetMethod(const SourceUnit& unit, int line) {
  if (line < 1 || line > unit.line_count()) return -1;
  const ByteRange bytes = unit.line_table[line - 1];
  for (std::size_t m = 0; m < unit.methods.size(); ++m) {
    const MethodRegion& region = unit.methods[m];
    if (!region.body_line_range.Contains(line)) continue;
    if (bytes.Overlaps(region.signature_span)) continue;
    const std::size_t lo = std::max(bytes.begin, region.body_span.begin + 1);
    const std::size_t hi = std::min(bytes.end, region.body_span.end - 1);
    for (std::size_t i = lo; i < hi; ++i) {
      if (!IsBlank(static_cast<unsigned char>(unit.text[i]))) {
        return static_cast<int>(m);
      }
    }
  }
  return -1;
}

bool IsStatementTarget(const SourceUnit& unit, int id, int method_index) {
  if (id < 0 || id >= static_cast<int>(unit.statements.size())) return false;
  if (method_index < 0 ||
      method_index >= static_cast<int>(unit.methods.size())) {
    return false;
  }
  if (unit.MethodOf(id) != method_index) return false;
  const int body = unit.methods[method_index].body;
  return unit.bodies[body].block != id;
}

void RequireValid(const SourceUnit& unit, const Locator& loc,
                  Granularity expected) {
  if (!unit.ok()) {
    throw Error(ErrorCode::kLocatorStale, "unit '" + unit.snippet_id +
                                              "' did not parse");
  }
  bool ok = loc.granularity == expected;
  if (ok && expected == Granularity::kLine) {
    ok = LineTargetMethod(unit, loc.index) == loc.method_index;
  } else if (ok) {
    ok = IsStatementTarget(unit, loc.index, loc.method_index);
  }
  if (!ok) {
    throw Error(ErrorCode::kLocatorStale,
                "locator " + std::string(loc.granularity == Granularity::kLine
                                             ? "l"
                                             : "s") +
                    std::to_string(loc.index) + " does not match unit '" +
                    unit.snippet_id + "'");
  }
}

// Line bytes without the terminator.
ByteRange LineContentRange(const SourceUnit& unit, int line) {
  ByteRange r = unit.line_table[line - 1];
  if (r.end > r.begin && unit.text[r.end - 1] == '\n') --r.end;
  if (r.end > r.begin && unit.text[r.end - 1] == '\r') --r.end;
  return r;
}

std::string Slice(const SourceUnit& unit, ByteRange r) {
  return unit.text.substr(r.begin, r.size());
}

std::string ApplyLineEdit(const SourceUnit& unit, const Edit& edit) {
  const int target = edit.target.index;
  const ByteRange target_line = unit.line_table[target - 1];
  const ByteRange target_content = LineContentRange(unit, target);
  if (edit.kind == EditKind::kDeleteLine) {
    return Splice(unit.text, {{target_line, ""}});
  }
  const int source = edit.source->index;
  const ByteRange source_content = LineContentRange(unit, source);
  const std::string source_text = Slice(unit, source_content);
  switch (edit.kind) {
    case EditKind::kReplaceLine:
      return Splice(unit.text, {{target_content, source_text}});
    case EditKind::kCopyLine: {
      const bool terminated = target_line.end > target_content.end;
      const std::string inserted =
          terminated ? source_text + "\n" : "\n" + source_text;
      return Splice(unit.text,
                    {{{target_line.end, target_line.end}, inserted}});
    }
    case EditKind::kSwapLine:
      if (source == target) return unit.text;
      return Splice(unit.text, {{target_content, source_text},
                                {source_content, Slice(unit, target_content)}});
    default:
      break;
  }
  return unit.text;
}

std::string LeadingLayout(const SourceUnit& unit, std::size_t begin) {
  std::size_t start = begin;
  while (start > 0 && IsBlank(static_cast<unsigned char>(unit.text[start - 1]))) {
    --start;
  }
  return unit.text.substr(start, begin - start);
}

std::string ApplyStatementEdit(const SourceUnit& unit, const Edit& edit) {
  const ByteRange target = unit.statements[edit.target.index].span;
  if (edit.kind == EditKind::kDeleteStmt) {
    return Splice(unit.text, {{target, ""}});
  }
  const ByteRange source = unit.statements[edit.source->index].span;
  const std::string source_text = Slice(unit, source);
  switch (edit.kind) {
    case EditKind::kReplaceStmt:
      return Splice(unit.text, {{target, source_text}});
    case EditKind::kCopyStmt:
      return Splice(unit.text, {{{target.end, target.end}, source_text}});
    case EditKind::kSwapStmt: {
      if (source == target) return unit.text;
      if (target.Contains(source) || source.Contains(target)) {
        const ByteRange outer = target.Contains(source) ? target : source;
        const ByteRange inner = target.Contains(source) ? source : target;
        return Splice(unit.text, {{outer, LeadingLayout(unit, inner.begin) +
                                              Slice(unit, inner)}});
      }
      return Splice(unit.text,
                    {{target, source_text}, {source, Slice(unit, target)}});
    }
    default:
      break;
  }
  return unit.text;
}

}  // namespace

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kCopyLine:
      return "COPY_LINE";
    case EditKind::kDeleteLine:
      return "DELETE_LINE";
    case EditKind::kReplaceLine:
      return "REPLACE_LINE";
    case EditKind::kSwapLine:
      return "SWAP_LINE";
    case EditKind::kCopyStmt:
      return "COPY_STMT";
    case EditKind::kDeleteStmt:
      return "DELETE_STMT";
    case EditKind::kReplaceStmt:
      return "REPLACE_STMT";
    case EditKind::kSwapStmt:
      return "SWAP_STMT";
  }
  return "UNKNOWN";
}

std::optional<EditKind> EditKindFromName(std::string_view name) {
  for (EditKind kind : kAllEditKinds) {
    if (EditKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

Granularity GranularityOf(EditKind kind) {
  switch (kind) {
    case EditKind::kCopyLine:
    case EditKind::kDeleteLine:
    case EditKind::kReplaceLine:
    case EditKind::kSwapLine:
      return Granularity::kLine;
    default:
      return Granularity::kStatement;
  }
}

bool IsDelete(EditKind kind) {
  return kind == EditKind::kDeleteLine || kind == EditKind::kDeleteStmt;
}

namespace {

std::string LocatorText(const std::optional<Locator>& loc) {
  if (!loc) return "-";
  return (loc->granularity == Granularity::kLine ? "l" : "s") +
         std::to_string(loc->index);
}

}  // namespace

std::string Canonicalize(const Patch& patch) {
  std::string out = patch.snippet_id;
  for (const Edit& e : patch.edits) {
    out += "|";
    out += EditKindName(e.kind);
    out += "|" + LocatorText(e.source) + "|" + LocatorText(e.target);
  }
  return out;
}

Patch MakePatch(std::string snippet_id, Edit edit) {
  Patch patch;
  patch.snippet_id = std::move(snippet_id);
  patch.edits.push_back(std::move(edit));
  patch.canonical = Canonicalize(patch);
  return patch;
}

std::vector<Locator> EnumerateTargets(const SourceUnit& unit,
                                      Granularity granularity) {
  std::vector<Locator> targets;
  if (unit.ok() && granularity == Granularity::kLine) {
    for (int line = 1; line <= unit.line_count(); ++line) {
      const int method = LineTargetMethod(unit, line);
      if (method >= 0) targets.push_back({granularity, method, line});
    }
  } else if (unit.ok()) {
    for (std::size_t m = 0; m < unit.methods.size(); ++m) {
      const MethodRegion& region = unit.methods[m];
      const int block = unit.bodies[region.body].block;
      for (int id : region.statement_ids) {
        if (id != block) {
          targets.push_back({granularity, static_cast<int>(m), id});
        }
      }
    }
  }
  if (targets.empty()) {
    throw Error(ErrorCode::kNoTargets,
                "unit '" + unit.snippet_id + "' has no " +
                    (granularity == Granularity::kLine ? "line" : "statement") +
                    " targets");
  }
  return targets;
}

ByteRange LocatorSpan(const SourceUnit& unit, const Locator& locator) {
  if (locator.granularity == Granularity::kLine) {
    return unit.line_table.at(static_cast<std::size_t>(locator.index - 1));
  }
  return unit.statements.at(static_cast<std::size_t>(locator.index)).span;
}

LineRange LocatorLines(const SourceUnit& unit, const Locator& locator) {
  if (locator.granularity == Granularity::kLine) {
    return {locator.index, locator.index};
  }
  return unit.statements.at(static_cast<std::size_t>(locator.index)).lines;
}

std::string ApplyEdit(const SourceUnit& unit, const Edit& edit) {
  const Granularity granularity = GranularityOf(edit.kind);
  RequireValid(unit, edit.target, granularity);
  if (NeedsSource(edit.kind)) {
    if (!edit.source) {
      throw Error(ErrorCode::kLocatorStale,
                  std::string(EditKindName(edit.kind)) + " requires a source");
    }
    RequireValid(unit, *edit.source, granularity);
  }
  return granularity == Granularity::kLine ? ApplyLineEdit(unit, edit)
                                           : ApplyStatementEdit(unit, edit);
}

std::string ApplyPatch(const SourceUnit& unit, const Patch& patch) {
  if (patch.edits.size() != 1) {
    throw Error(ErrorCode::kInvalidInput,
                "only single-edit patches are supported");
  }
  return ApplyEdit(unit, patch.edits.front());
}

}  // namespace snipforge
