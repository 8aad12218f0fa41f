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

#ifndef SNIPFORGE_CORPUS_H_
#define SNIPFORGE_CORPUS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "snipforge/snippet.h"
#include "snipforge/source_unit.h"

namespace snipforge {

enum class RejectionReason {
  kNoMethod,
  kParseFailure,
  kUnsupportedFeature,
  kEmpty,
  kIoFailure,
};

std::string_view RejectionReasonName(RejectionReason reason);

struct Rejection {
  std::string id;
  RejectionReason reason = RejectionReason::kParseFailure;
  std::string detail;
};

struct CorpusManifest {
  std::vector<std::string> accepted;  // sorted
  std::vector<Rejection> rejected;    // sorted by id
  int ingested_files = 0;
  int accepted_files = 0;
  int accepted_methods = 0;
};

struct CorpusEntry {
  Snippet snippet;
  SourceUnit unit;
};

struct Corpus {
  CorpusManifest manifest;
  std::vector<CorpusEntry> entries;  // accepted units, same order as manifest
};

// Outcome of running one snippet through the acceptance filter.
struct Admission {
  bool accepted = false;
  Rejection rejection;
  CorpusEntry entry;
};

Admission AdmitSnippet(std::string_view raw, std::string_view id,
                       std::string origin_path = "");

// Ingests every `*.java` file directly inside `dir`, in lexicographic id
// order. Unreadable files are recorded as IO_FAILURE rejections. Throws
// Error(kEmptyCorpus) when no file is ingested and Error(kIoFailure) when
// `dir` is not a readable directory.
Corpus BuildCorpus(const std::filesystem::path& dir);

// Builds a corpus from in-memory (id, raw text) pairs.
Corpus BuildCorpusFromTexts(
    const std::vector<std::pair<std::string, std::string>>& files);

}  // namespace snipforge

#endif  // SNIPFORGE_CORPUS_H_
