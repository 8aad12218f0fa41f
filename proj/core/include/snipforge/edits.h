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

#ifndef SNIPFORGE_EDITS_H_
#define SNIPFORGE_EDITS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snipforge/common.h"
#include "snipforge/source_unit.h"

namespace snipforge {

enum class Granularity { kLine, kStatement };

enum class EditKind {
  kCopyLine,
  kDeleteLine,
  kReplaceLine,
  kSwapLine,
  kCopyStmt,
  kDeleteStmt,
  kReplaceStmt,
  kSwapStmt,
};

// Report column order: copy/delete/replace/swap, lines then statements.
inline constexpr std::array<EditKind, 8> kAllEditKinds = {
    EditKind::kCopyLine,    EditKind::kDeleteLine, EditKind::kReplaceLine,
    EditKind::kSwapLine,    EditKind::kCopyStmt,   EditKind::kDeleteStmt,
    EditKind::kReplaceStmt, EditKind::kSwapStmt,
};

std::string_view EditKindName(EditKind kind);
std::optional<EditKind> EditKindFromName(std::string_view name);
Granularity GranularityOf(EditKind kind);
bool IsDelete(EditKind kind);
inline bool NeedsSource(EditKind kind) { return !IsDelete(kind); }

struct Locator {
  Granularity granularity = Granularity::kLine;
  int method_index = 0;
  int index = 0;  // 1-based line number, or statement id

  friend bool operator==(const Locator&, const Locator&) = default;
};

struct Edit {
  EditKind kind = EditKind::kDeleteLine;
  Locator target;
  std::optional<Locator> source;
};

struct Patch {
  std::string snippet_id;
  std::vector<Edit> edits;
  std::string canonical;
};

// `<snippet>|<KIND>|<src>|<tgt>` per edit, with `l<line>` / `s<id>` locators
// and `-` for an absent source. Stable across runs; the dedup key.
std::string Canonicalize(const Patch& patch);
Patch MakePatch(std::string snippet_id, Edit edit);

// LINE: every line holding non-blank body text of some method, except lines
// that share bytes with the method signature. STATEMENT: every statement in a
// method body except the body block itself. Throws Error(kNoTargets) when
// the unit yields none.
std::vector<Locator> EnumerateTargets(const SourceUnit& unit,
                                      Granularity granularity);

// Original byte range a locator designates: the whole line including its
// terminator, or the statement span.
ByteRange LocatorSpan(const SourceUnit& unit, const Locator& locator);
LineRange LocatorLines(const SourceUnit& unit, const Locator& locator);

// Applies one edit to the unit's original text and returns the patched text.
// SWAP_STMT over nested spans replaces the outer span with the inner
// statement (and the layout whitespace that precedes it). Throws
// Error(kLocatorStale) if a locator does not designate a target of `unit`.
std::string ApplyEdit(const SourceUnit& unit, const Edit& edit);

// Applies a patch's edits; single-edit patches only.
std::string ApplyPatch(const SourceUnit& unit, const Patch& patch);

}  // namespace snipforge

#endif  // SNIPFORGE_EDITS_H_
