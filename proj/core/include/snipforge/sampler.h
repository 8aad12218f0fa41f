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

#ifndef SNIPFORGE_SAMPLER_H_
#define SNIPFORGE_SAMPLER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "snipforge/corpus.h"
#include "snipforge/edits.h"
#include "snipforge/rational.h"
#include "snipforge/rules.h"
#include "snipforge/validity.h"

namespace snipforge {

enum class SamplingMode { kGlobalPool, kPerFile };

// Decides validity of a parsed patched unit. Must be safe to call from
// several threads at once.
using Validator = std::function<Validity(const SourceUnit& patched)>;

Validator ProxyValidator();

struct SamplerConfig {
  std::uint64_t seed = 0;
  int n_line = 0;
  int n_stmt = 0;
  SamplingMode mode = SamplingMode::kGlobalPool;
  int jobs = 1;
  Validator validator;  // empty means ProxyValidator()
};

struct Draw {
  std::size_t entry = 0;  // index into Corpus::entries
  Patch patch;
};

struct DrawResult {
  std::vector<Draw> draws;           // in draw order, duplicates included
  std::vector<std::string> notices;  // units skipped for lack of targets
};

struct PatchOutcome {
  Patch patch;
  std::size_t entry = 0;
  std::string patched_text;
  ParseStatus parse_status;
  Validity validity;
  std::optional<std::vector<Violation>> violations;  // nullopt: UNANALYZABLE

  EditKind kind() const { return patch.edits.front().kind; }
  Granularity granularity() const { return GranularityOf(kind()); }
};

struct SampleResult {
  std::vector<PatchOutcome> outcomes;  // retained patches in draw order
  std::size_t drawn = 0;
  std::size_t duplicates = 0;
  std::vector<std::string> notices;
};

// SplitMix64 finalizer; exposed for tests.
std::uint64_t SplitMix64(std::uint64_t x);

// Generates the raw draw sequence: all line draws, then all statement draws.
// Draw i uses its own generator seeded from (seed, i). Throws
// Error(kEmptyCorpus) on an empty corpus and Error(kInvalidConfig) on
// negative counts.
DrawResult DrawPatches(const Corpus& corpus, const SamplerConfig& config);

// First occurrence of each canonical string wins.
std::vector<Draw> Deduplicate(const std::vector<Draw>& draws);

// Applies a patch to the original unit, checks validity and analyzes the
// result when it parses.
PatchOutcome EvaluatePatch(const CorpusEntry& entry, const Patch& patch,
                           const Validator& validator);

// Draw, dedup, and evaluate on `config.jobs` workers. Output order is draw
// order and does not depend on the worker count.
SampleResult SamplePatches(const Corpus& corpus, const SamplerConfig& config);

struct ValidityRates {
  int line_valid = 0;
  int line_total = 0;
  int stmt_valid = 0;
  int stmt_total = 0;
  Rational line_rate;
  Rational stmt_rate;
  Rational overall_rate;
};

// Throws Error(kInvalidInput) on an empty batch. A granularity with no
// outcomes gets an undefined rate.
ValidityRates ComputeValidityRates(const std::vector<PatchOutcome>& outcomes);

}  // namespace snipforge

#endif  // SNIPFORGE_SAMPLER_H_
