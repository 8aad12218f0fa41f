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

#ifndef SNIPFORGE_PIPELINE_H_
#define SNIPFORGE_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "snipforge/corpus.h"
#include "snipforge/sampler.h"
#include "snipforge/serialize.h"

namespace snipforge {

enum class ValidityMode { kProxy, kExternal };
std::string_view ValidityModeName(ValidityMode mode);

struct RunConfig {
  std::filesystem::path corpus_dir;
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  int n_line = 0;
  int n_stmt = 0;
  ValidityMode validity_mode = ValidityMode::kProxy;
  std::optional<std::string> compiler_cmd;
  int jobs = 1;
  SamplingMode sampling = SamplingMode::kGlobalPool;
};

// Throws Error(kInvalidConfig) when the configuration is inconsistent, e.g.
// external validity without a `{file}` template.
void ValidateConfig(const RunConfig& config);

// Writes each patched text to a scratch file named after its public class and
// runs `command_template` with every `{file}` replaced by that path. Exit
// status 0 is VALID; anything else is INVALID(EXTERNAL).
Validator ExternalValidator(std::string command_template);

inline constexpr const char* kArtifactNames[] = {
    "manifest.json",       "originals_violations.jsonl", "patches.jsonl",
    "matrix_valid.csv",    "matrix_invalid.csv",         "summary.json",
};

struct RunArtifacts {
  std::map<std::string, std::string> files;  // artifact name -> contents
  RunSummary summary;
};

// Everything `run` does except disk output.
RunArtifacts ComputeRun(const Corpus& corpus, const RunConfig& config);

// Ingests, samples, reports, and writes the artifacts to config.out_dir.
// Files are staged in a scratch directory and renamed into place, so a
// failed run leaves no partial artifacts. Throws Error on failure.
RunArtifacts RunPipeline(const RunConfig& config);

// `analyze FILE`: prints `<file>:<line>: <rule>: <message>` per violation.
// Returns 0 when clean, 2 when violations were found, 1 on read or parse
// failure (with the location on `err`).
int AnalyzeFile(const std::filesystem::path& file, std::ostream& out,
                std::ostream& err);

}  // namespace snipforge

#endif  // SNIPFORGE_PIPELINE_H_
