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

#ifndef SNIPFORGE_REPORT_H_
#define SNIPFORGE_REPORT_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snipforge/edits.h"
#include "snipforge/rational.h"
#include "snipforge/rules.h"
#include "snipforge/sampler.h"

namespace snipforge {

using RuleCounts = std::map<RuleId, int>;

RuleCounts CountByRule(const std::vector<Violation>& violations);
int Total(const RuleCounts& counts);

struct DeltaRecord {
  std::string canonical;
  std::string snippet_id;
  EditKind edit_kind = EditKind::kDeleteLine;
  Validity validity;
  int before = 0;
  std::optional<int> after;  // nullopt: UNANALYZABLE
  RuleCounts after_by_rule;
  RuleCounts removed;
  RuleCounts introduced;

  bool cleaned() const { return before > 0 && after && *after == 0; }
};

// Rule-keyed multiset difference between the original's violations and the
// outcome's. Line numbers are ignored.
DeltaRecord ComputeDelta(const std::vector<Violation>& original,
                         const PatchOutcome& outcome);

enum class Partition { kValid, kInvalid };
std::string_view PartitionName(Partition p);
Partition PartitionOf(const Validity& validity);

struct PartitionMatrix {
  std::map<RuleId, std::array<int, 8>> cells;  // columns: kAllEditKinds
  std::map<RuleId, int> row_totals;
  std::array<int, 8> column_totals{};
  int total = 0;
  std::array<int, 8> files{};  // records with after > 0
  int files_total = 0;
};

struct MatrixReport {
  std::vector<RuleId> rows;  // original count descending, then name
  RuleCounts original;
  int original_total = 0;
  int original_files = 0;
  PartitionMatrix valid;
  PartitionMatrix invalid;

  const PartitionMatrix& partition(Partition p) const {
    return p == Partition::kValid ? valid : invalid;
  }
};

// `original` holds per-rule counts over the original units and
// `original_files` the number of originals with at least one violation.
// UNANALYZABLE records contribute nothing.
MatrixReport BuildMatrix(const std::vector<DeltaRecord>& records,
                         const RuleCounts& original, int original_files);

enum class CleaningClass { kDeletedOffender, kModifiedOffender, kOther };
std::string_view CleaningClassName(CleaningClass c);

// Throws Error(kInvalidInput) unless `record` is fully cleaned.
CleaningClass ClassifyCleaning(const DeltaRecord& record,
                               const SourceUnit& original_unit,
                               const std::vector<Violation>& original,
                               const PatchOutcome& outcome);

struct OriginalAnalysis {
  const SourceUnit* unit = nullptr;
  std::vector<Violation> violations;
};

struct CleanCensus {
  std::vector<std::string> cleaned_patches;
  std::map<int, int> histogram;  // issues removed -> patches
  int valid_cleaned = 0;
  Rational valid_fraction;
  std::map<std::string, CleaningClass> cleaning_classes;
  std::map<CleaningClass, int> class_counts;
  std::map<CleaningClass, int> valid_class_counts;
};

// `records[i]` must describe `outcomes[i]`; `originals` is indexed by
// Corpus::entries position.
CleanCensus BuildCensus(const std::vector<DeltaRecord>& records,
                        const std::vector<PatchOutcome>& outcomes,
                        const std::vector<OriginalAnalysis>& originals);

struct Averages {
  Rational original;       // violations per original with violations
  Rational patched;        // violations per analyzable patched variant
  Rational valid_patched;  // same, VALID partition only
};

Averages ComputeAverages(const std::vector<DeltaRecord>& records,
                         int original_total, int original_files);

}  // namespace snipforge

#endif  // SNIPFORGE_REPORT_H_
