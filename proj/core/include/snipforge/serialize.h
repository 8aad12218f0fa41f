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

#ifndef SNIPFORGE_SERIALIZE_H_
#define SNIPFORGE_SERIALIZE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snipforge/corpus.h"
#include "snipforge/report.h"
#include "snipforge/rules.h"
#include "snipforge/sampler.h"

namespace snipforge {

// Every writer below returns complete text ending in a newline; JSON-lines
// writers return a single line.

std::string ManifestToJson(const CorpusManifest& manifest);

// {"snippet_id": ..., "violations": [{rule, line, message}] | "UNANALYZABLE"}
std::string OriginalViolationsToJsonLine(
    std::string_view snippet_id,
    const std::optional<std::vector<Violation>>& violations);

std::string OutcomeToJsonLine(const PatchOutcome& outcome,
                              const DeltaRecord& record);

// One partition of the matrix. `validity_mode` names the check that defines
// the partition in the header comment.
std::string MatrixToCsv(const MatrixReport& matrix, Partition partition,
                        std::string_view validity_mode);

struct RunSummary {
  std::uint64_t seed = 0;
  int n_line = 0;
  int n_stmt = 0;
  std::string sampling_mode;
  std::string validity_mode;
  int ingested_files = 0;
  int accepted_files = 0;
  int accepted_methods = 0;
  int originals_with_violations = 0;
  int original_violations = 0;
  std::size_t drawn = 0;
  std::size_t retained = 0;
  std::size_t duplicates = 0;
  std::size_t distinct_patched_texts = 0;
  std::size_t focus_records = 0;
  std::optional<ValidityRates> rates;
  MatrixReport matrix;
  CleanCensus census;
  Averages averages;
  std::vector<std::string> notices;
};

std::string SummaryToJson(const RunSummary& summary);

}  // namespace snipforge

#endif  // SNIPFORGE_SERIALIZE_H_
