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

#include "snipforge/report.h"

#include <algorithm>

namespace snipforge {
namespace {

std::size_t ColumnOf(EditKind kind) {
  return static_cast<std::size_t>(
      std::find(kAllEditKinds.begin(), kAllEditKinds.end(), kind) -
      kAllEditKinds.begin());
}

bool Covers(const std::vector<LineRange>& ranges, int line) {
  return std::any_of(ranges.begin(), ranges.end(),
                     [line](const LineRange& r) { return r.Contains(line); });
}

}  // namespace

RuleCounts CountByRule(const std::vector<Violation>& violations) {
  RuleCounts counts;
  for (const Violation& v : violations) ++counts[v.rule];
  return counts;
}

int Total(const RuleCounts& counts) {
  int total = 0;
  for (const auto& [rule, n] : counts) total += n;
  return total;
}

DeltaRecord ComputeDelta(const std::vector<Violation>& original,
                         const PatchOutcome& outcome) {
  DeltaRecord record;
  record.canonical = outcome.patch.canonical;
  record.snippet_id = outcome.patch.snippet_id;
  record.edit_kind = outcome.kind();
  record.validity = outcome.validity;
  record.before = static_cast<int>(original.size());
  if (!outcome.violations) return record;
  record.after = static_cast<int>(outcome.violations->size());
  record.after_by_rule = CountByRule(*outcome.violations);
  const RuleCounts before = CountByRule(original);
  for (RuleId rule : kAllRules) {
    const auto b = before.find(rule);
    const auto a = record.after_by_rule.find(rule);
    const int nb = b == before.end() ? 0 : b->second;
    const int na = a == record.after_by_rule.end() ? 0 : a->second;
    if (nb > na) record.removed[rule] = nb - na;
    if (na > nb) record.introduced[rule] = na - nb;
  }
  return record;
}

std::string_view PartitionName(Partition p) {
  return p == Partition::kValid ? "VALID" : "INVALID";
}

Partition PartitionOf(const Validity& validity) {
  return validity.valid() ? Partition::kValid : Partition::kInvalid;
}

MatrixReport BuildMatrix(const std::vector<DeltaRecord>& records,
                         const RuleCounts& original, int original_files) {
  MatrixReport report;
  report.original = original;
  report.original_total = Total(original);
  report.original_files = original_files;
  report.rows.assign(kAllRules.begin(), kAllRules.end());
  auto count_of = [&](RuleId rule) {
    const auto it = original.find(rule);
    return it == original.end() ? 0 : it->second;
  };
  std::sort(report.rows.begin(), report.rows.end(),
            [&](RuleId a, RuleId b) {
              if (count_of(a) != count_of(b)) return count_of(a) > count_of(b);
              return RuleName(a) < RuleName(b);
            });
  for (PartitionMatrix* m : {&report.valid, &report.invalid}) {
    for (RuleId rule : kAllRules) {
      m->cells[rule].fill(0);
      m->row_totals[rule] = 0;
    }
  }
  for (const DeltaRecord& r : records) {
    if (!r.after) continue;
    PartitionMatrix& m = PartitionOf(r.validity) == Partition::kValid
                             ? report.valid
                             : report.invalid;
    const std::size_t column = ColumnOf(r.edit_kind);
    for (const auto& [rule, n] : r.after_by_rule) {
      m.cells[rule][column] += n;
      m.row_totals[rule] += n;
      m.column_totals[column] += n;
      m.total += n;
    }
    if (*r.after > 0) {
      ++m.files[column];
      ++m.files_total;
    }
  }
  return report;
}

std::string_view CleaningClassName(CleaningClass c) {
  switch (c) {
    case CleaningClass::kDeletedOffender:
      return "DELETED_OFFENDER";
    case CleaningClass::kModifiedOffender:
      return "MODIFIED_OFFENDER";
    case CleaningClass::kOther:
      return "OTHER";
  }
  return "OTHER";
}

CleaningClass ClassifyCleaning(const DeltaRecord& record,
                               const SourceUnit& original_unit,
                               const std::vector<Violation>& original,
                               const PatchOutcome& outcome) {
  if (!record.cleaned()) {
    throw Error(ErrorCode::kInvalidInput,
                "patch " + record.canonical + " is not fully cleaned");
  }
  const Edit& edit = outcome.patch.edits.front();
  std::vector<LineRange> edited = {LocatorLines(original_unit, edit.target)};
  if (edit.source && (edit.kind == EditKind::kSwapLine ||
                      edit.kind == EditKind::kSwapStmt)) {
    edited.push_back(LocatorLines(original_unit, *edit.source));
  }
  const bool all_covered =
      std::all_of(original.begin(), original.end(), [&](const Violation& v) {
        return Covers(edited, v.line);
      });
  if (!all_covered) return CleaningClass::kOther;
  return IsDelete(edit.kind) ? CleaningClass::kDeletedOffender
                             : CleaningClass::kModifiedOffender;
}

CleanCensus BuildCensus(const std::vector<DeltaRecord>& records,
                        const std::vector<PatchOutcome>& outcomes,
                        const std::vector<OriginalAnalysis>& originals) {
  if (records.size() != outcomes.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "records and outcomes differ in length");
  }
  CleanCensus census;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const DeltaRecord& r = records[i];
    if (!r.cleaned()) continue;
    census.cleaned_patches.push_back(r.canonical);
    ++census.histogram[Total(r.removed)];
    const OriginalAnalysis& original = originals.at(outcomes[i].entry);
    const CleaningClass c = ClassifyCleaning(r, *original.unit,
                                             original.violations, outcomes[i]);
    census.cleaning_classes[r.canonical] = c;
    ++census.class_counts[c];
    if (r.validity.valid()) {
      ++census.valid_cleaned;
      ++census.valid_class_counts[c];
    }
  }
  census.valid_fraction =
      Rational(census.valid_cleaned,
               static_cast<std::int64_t>(census.cleaned_patches.size()));
  return census;
}

Averages ComputeAverages(const std::vector<DeltaRecord>& records,
                         int original_total, int original_files) {
  Averages averages;
  averages.original = Rational(original_total, original_files);
  std::int64_t sum = 0;
  std::int64_t count = 0;
  std::int64_t valid_sum = 0;
  std::int64_t valid_count = 0;
  for (const DeltaRecord& r : records) {
    if (!r.after) continue;
    sum += *r.after;
    ++count;
    if (r.validity.valid()) {
      valid_sum += *r.after;
      ++valid_count;
    }
  }
  averages.patched = Rational(sum, count);
  averages.valid_patched = Rational(valid_sum, valid_count);
  return averages;
}

}  // namespace snipforge
