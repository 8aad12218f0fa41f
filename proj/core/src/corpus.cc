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

#include "snipforge/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "snipforge/common.h"
#include "snipforge/validity.h"

namespace snipforge {

std::string_view RejectionReasonName(RejectionReason reason) {
  switch (reason) {
    case RejectionReason::kNoMethod:
      return "NO_METHOD";
    case RejectionReason::kParseFailure:
      return "PARSE_FAILURE";
    case RejectionReason::kUnsupportedFeature:
      return "UNSUPPORTED_FEATURE";
    case RejectionReason::kEmpty:
      return "EMPTY";
    case RejectionReason::kIoFailure:
      return "IO_FAILURE";
  }
  return "UNKNOWN";
}

Admission AdmitSnippet(std::string_view raw, std::string_view id,
                       std::string origin_path) {
  Admission result;
  result.rejection.id = std::string(id);
  Snippet snippet;
  try {
    snippet = WrapSnippet(raw, id);
  } catch (const Error&) {
    result.rejection.reason = RejectionReason::kEmpty;
    return result;
  }
  snippet.origin_path = std::move(origin_path);
  SourceUnit unit = ParseUnit(snippet);
  if (!unit.ok()) {
    result.rejection.reason =
        unit.status.failure == ParseFailure::kUnsupported
            ? RejectionReason::kUnsupportedFeature
            : RejectionReason::kParseFailure;
    result.rejection.detail = std::to_string(unit.status.line) + ":" +
                              std::to_string(unit.status.column) + ": " +
                              unit.status.reason;
    return result;
  }
  if (unit.methods.empty()) {
    result.rejection.reason = RejectionReason::kNoMethod;
    return result;
  }
  // Originals must pass the same validity proxy patches are judged by.
  const Validity validity = CheckValidity(unit);
  if (!validity.valid()) {
    result.rejection.reason = RejectionReason::kParseFailure;
    result.rejection.detail = validity.ToString();
    return result;
  }
  result.accepted = true;
  result.entry.snippet = std::move(snippet);
  result.entry.unit = std::move(unit);
  return result;
}

namespace {

void Record(Corpus& corpus, Admission admission) {
  ++corpus.manifest.ingested_files;
  if (admission.accepted) {
    corpus.manifest.accepted.push_back(admission.entry.snippet.id);
    ++corpus.manifest.accepted_files;
    corpus.manifest.accepted_methods +=
        static_cast<int>(admission.entry.unit.methods.size());
    corpus.entries.push_back(std::move(admission.entry));
  } else {
    corpus.manifest.rejected.push_back(std::move(admission.rejection));
  }
}

}  // namespace

Corpus BuildCorpusFromTexts(
    const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<std::pair<std::string, std::string>> sorted = files;
  std::sort(sorted.begin(), sorted.end());
  Corpus corpus;
  for (const auto& [id, text] : sorted) Record(corpus, AdmitSnippet(text, id));
  if (corpus.manifest.ingested_files == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "no snippets were ingested");
  }
  return corpus;
}

Corpus BuildCorpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIoFailure,
                "corpus directory '" + dir.string() + "' is not readable");
  }
  std::vector<fs::path> paths;
  for (const auto& item : fs::directory_iterator(dir, ec)) {
    if (item.path().extension() == ".java") paths.push_back(item.path());
  }
  if (ec) {
    throw Error(ErrorCode::kIoFailure,
                "cannot list '" + dir.string() + "': " + ec.message());
  }
  std::sort(paths.begin(), paths.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.stem().string() < b.stem().string();
            });

  Corpus corpus;
  for (const fs::path& path : paths) {
    const std::string id = path.stem().string();
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    if (in) buffer << in.rdbuf();
    if (!in || in.bad()) {
      ++corpus.manifest.ingested_files;
      corpus.manifest.rejected.push_back(
          {id, RejectionReason::kIoFailure, "cannot read " + path.string()});
      continue;
    }
    Record(corpus, AdmitSnippet(buffer.str(), id, path.string()));
  }
  if (corpus.manifest.ingested_files == 0) {
    throw Error(ErrorCode::kEmptyCorpus,
                "no .java files found in '" + dir.string() + "'");
  }
  return corpus;
}

}  // namespace snipforge
