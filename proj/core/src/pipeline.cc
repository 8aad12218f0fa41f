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

#include "snipforge/pipeline.h"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "snipforge/report.h"
#include "snipforge/rules.h"

namespace snipforge {
namespace {

namespace fs = std::filesystem;

std::string ReplaceAll(std::string text, std::string_view from,
                       std::string_view to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

// Name of the top-level public class, else of the first top-level class.
std::string PublicClassName(const SourceUnit& unit) {
  std::string first;
  bool saw_public = false;
  int depth = 0;
  const std::vector<Token>& tokens = unit.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.IsTrivia()) continue;
    if (t.Is(TokenKind::kPunct, "{")) ++depth;
    if (t.Is(TokenKind::kPunct, "}")) --depth;
    if (depth != 0) continue;
    if (t.Is(TokenKind::kKeyword, "public")) saw_public = true;
    if (t.Is(TokenKind::kPunct, ";")) saw_public = false;
    if (!t.Is(TokenKind::kKeyword, "class")) continue;
    std::size_t j = i + 1;
    while (j < tokens.size() && tokens[j].IsTrivia()) ++j;
    if (j < tokens.size() && tokens[j].kind == TokenKind::kIdent) {
      if (saw_public) return tokens[j].text;
      if (first.empty()) first = tokens[j].text;
    }
    saw_public = false;
  }
  return first.empty() ? "Snippet" : first;
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  out.close();
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot write '" + path.string() + "'");
  }
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot read '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string_view ValidityModeName(ValidityMode mode) {
  return mode == ValidityMode::kProxy ? "proxy" : "external";
}

void ValidateConfig(const RunConfig& config) {
  if (config.n_line < 0 || config.n_stmt < 0) {
    throw Error(ErrorCode::kInvalidConfig, "--n-line and --n-stmt must be >= 0");
  }
  if (config.jobs < 1) {
    throw Error(ErrorCode::kInvalidConfig, "--jobs must be >= 1");
  }
  if (config.validity_mode == ValidityMode::kExternal &&
      (!config.compiler_cmd ||
       config.compiler_cmd->find("{file}") == std::string::npos)) {
    throw Error(ErrorCode::kInvalidConfig,
                "external validity needs --compiler-cmd containing {file}");
  }
}

Validator ExternalValidator(std::string command_template) {
  auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
  return [command_template = std::move(command_template),
          counter](const SourceUnit& unit) {
    const fs::path dir =
        fs::temp_directory_path() /
        ("snipforge-" + std::to_string(::getpid()) + "-" +
         std::to_string(counter->fetch_add(1)));
    fs::create_directories(dir);
    const fs::path file = dir / (PublicClassName(unit) + ".java");
    Validity result = Validity::Invalid(ValidityReason::kExternal);
    try {
      WriteFile(file, unit.text);
      const std::string command =
          "(" + ReplaceAll(command_template, "{file}", file.string()) +
          ") >/dev/null 2>&1";
      const int status = std::system(command.c_str());
      if (status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0) {
        result = Validity::Valid();
      } else {
        result.detail = "exit status " +
                        std::to_string(status == -1 || !WIFEXITED(status)
                                           ? -1
                                           : WEXITSTATUS(status));
      }
    } catch (const Error& e) {
      result.detail = e.what();
    }
    std::error_code ec;
    fs::remove_all(dir, ec);
    return result;
  };
}

RunArtifacts ComputeRun(const Corpus& corpus, const RunConfig& config) {
  ValidateConfig(config);
  RunArtifacts artifacts;
  RunSummary& summary = artifacts.summary;

  std::vector<OriginalAnalysis> originals(corpus.entries.size());
  RuleCounts original_counts;
  std::string originals_jsonl;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    const CorpusEntry& entry = corpus.entries[i];
    const std::optional<std::vector<Violation>> found = Analyze(entry.unit);
    originals_jsonl += OriginalViolationsToJsonLine(entry.snippet.id, found);
    originals[i].unit = &entry.unit;
    if (found) originals[i].violations = *found;
    for (const Violation& v : originals[i].violations) ++original_counts[v.rule];
    if (!originals[i].violations.empty()) ++summary.originals_with_violations;
  }
  summary.original_violations = Total(original_counts);

  SamplerConfig sampler;
  sampler.seed = config.seed;
  sampler.n_line = config.n_line;
  sampler.n_stmt = config.n_stmt;
  sampler.mode = config.sampling;
  sampler.jobs = config.jobs;
  if (config.validity_mode == ValidityMode::kExternal) {
    sampler.validator = ExternalValidator(*config.compiler_cmd);
  }
  SampleResult sample = SamplePatches(corpus, sampler);

  std::vector<DeltaRecord> records;
  std::vector<DeltaRecord> focus;
  std::string patches_jsonl;
  std::unordered_set<std::string> texts;
  for (const PatchOutcome& outcome : sample.outcomes) {
    records.push_back(
        ComputeDelta(originals[outcome.entry].violations, outcome));
    patches_jsonl += OutcomeToJsonLine(outcome, records.back());
    if (records.back().before > 0) focus.push_back(records.back());
    texts.insert(outcome.patch.snippet_id + '\0' + outcome.patched_text);
  }

  summary.seed = config.seed;
  summary.n_line = config.n_line;
  summary.n_stmt = config.n_stmt;
  summary.sampling_mode =
      config.sampling == SamplingMode::kGlobalPool ? "GLOBAL_POOL" : "PER_FILE";
  summary.validity_mode = std::string(ValidityModeName(config.validity_mode));
  summary.ingested_files = corpus.manifest.ingested_files;
  summary.accepted_files = corpus.manifest.accepted_files;
  summary.accepted_methods = corpus.manifest.accepted_methods;
  summary.drawn = sample.drawn;
  summary.retained = sample.outcomes.size();
  summary.duplicates = sample.duplicates;
  summary.distinct_patched_texts = texts.size();
  summary.focus_records = focus.size();
  if (!sample.outcomes.empty()) {
    summary.rates = ComputeValidityRates(sample.outcomes);
  }
  summary.matrix = BuildMatrix(focus, original_counts,
                               summary.originals_with_violations);
  summary.census = BuildCensus(records, sample.outcomes, originals);
  summary.averages = ComputeAverages(focus, summary.original_violations,
                                     summary.originals_with_violations);
  summary.notices = std::move(sample.notices);

  const std::string mode = summary.validity_mode;
  artifacts.files["manifest.json"] = ManifestToJson(corpus.manifest);
  artifacts.files["originals_violations.jsonl"] = std::move(originals_jsonl);
  artifacts.files["patches.jsonl"] = std::move(patches_jsonl);
  artifacts.files["matrix_valid.csv"] =
      MatrixToCsv(summary.matrix, Partition::kValid, mode);
  artifacts.files["matrix_invalid.csv"] =
      MatrixToCsv(summary.matrix, Partition::kInvalid, mode);
  artifacts.files["summary.json"] = SummaryToJson(summary);
  return artifacts;
}

RunArtifacts RunPipeline(const RunConfig& config) {
  ValidateConfig(config);
  const Corpus corpus = BuildCorpus(config.corpus_dir);
  if (corpus.entries.empty()) {
    throw Error(ErrorCode::kEmptyCorpus,
                "no snippet in '" + config.corpus_dir.string() +
                    "' passed the filter");
  }
  RunArtifacts artifacts = ComputeRun(corpus, config);

  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec || !fs::is_directory(config.out_dir)) {
    throw Error(ErrorCode::kIoFailure, "cannot create output directory '" +
                                           config.out_dir.string() + "'");
  }
  const fs::path staging =
      config.out_dir / (".staging-" + std::to_string(::getpid()));
  try {
    fs::create_directory(staging);
    for (const auto& [name, contents] : artifacts.files) {
      WriteFile(staging / name, contents);
    }
    for (const auto& [name, contents] : artifacts.files) {
      fs::rename(staging / name, config.out_dir / name);
    }
  } catch (const fs::filesystem_error& e) {
    fs::remove_all(staging, ec);
    throw Error(ErrorCode::kIoFailure, e.what());
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
  fs::remove_all(staging, ec);
  return artifacts;
}

int AnalyzeFile(const fs::path& file, std::ostream& out, std::ostream& err) {
  std::string raw;
  try {
    raw = ReadFile(file);
  } catch (const Error& e) {
    err << file.string() << ": error: " << e.what() << "\n";
    return 1;
  }
  Snippet snippet;
  try {
    snippet = WrapSnippet(raw, file.stem().string());
  } catch (const Error& e) {
    err << file.string() << ": error: " << e.what() << "\n";
    return 1;
  }
  const SourceUnit unit = ParseUnit(snippet);
  if (!unit.ok()) {
    err << file.string() << ":" << unit.status.line - snippet.line_offset
        << ":" << unit.status.column << ": error: " << unit.status.reason
        << "\n";
    return 1;
  }
  const std::vector<Violation> found = *Analyze(unit);
  for (const Violation& v : found) {
    out << file.string() << ":" << v.line - snippet.line_offset << ": "
        << RuleName(v.rule) << ": " << v.message << "\n";
  }
  return found.empty() ? 0 : 2;
}

}  // namespace snipforge
