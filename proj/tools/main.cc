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

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "snipforge/common.h"
#include "snipforge/pipeline.h"
#include "snipforge/snippet.h"
#include "snipforge/source_unit.h"

namespace {

// SNIPFORGE_SEED wins over --seed when set.
bool SeedFromEnvironment(std::uint64_t* seed) {
  const char* value = std::getenv("SNIPFORGE_SEED");
  if (value == nullptr || *value == '\0') return false;
  std::size_t used = 0;
  try {
    *seed = std::stoull(value, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || value[used] != '\0') {
    throw snipforge::Error(snipforge::ErrorCode::kInvalidConfig,
                           std::string("SNIPFORGE_SEED is not an unsigned "
                                       "64-bit integer: ") + value);
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sample single-edit patches of Java snippets and report "
               "performance lint deltas."};
  app.require_subcommand(1);

  snipforge::RunConfig config;
  std::string corpus_dir;
  std::string out_dir;
  std::string validity = "proxy";
  std::string sampling = "global";
  std::string compiler_cmd;
  CLI::App* run = app.add_subcommand("run", "Run the full pipeline.");
  run->add_option("--corpus", corpus_dir, "Directory of .java snippets")
      ->required();
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--seed", config.seed, "Sampler seed")->required();
  run->add_option("--n-line", config.n_line, "Line-edit draws")->required();
  run->add_option("--n-stmt", config.n_stmt, "Statement-edit draws")
      ->required();
  run->add_option("--validity", validity, "Validity check")
      ->check(CLI::IsMember({"proxy", "external"}));
  run->add_option("--compiler-cmd", compiler_cmd,
                  "Compiler command template containing {file}");
  run->add_option("--jobs", config.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  run->add_option("--sampling", sampling, "Unit selection scheme")
      ->check(CLI::IsMember({"global", "per-file"}));

  std::string analyze_file;
  CLI::App* analyze = app.add_subcommand("analyze", "Lint one Java file.");
  analyze->add_option("file", analyze_file, "Java source file")->required();

  std::string tree_file;
  CLI::App* tree =
      app.add_subcommand("tree", "Dump the statement tree of a file as JSON.");
  tree->add_option("file", tree_file, "Java source file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      return snipforge::AnalyzeFile(analyze_file, std::cout, std::cerr);
    }
    if (*tree) {
      std::ifstream in(tree_file, std::ios::binary);
      if (!in) {
        std::cerr << tree_file << ": error: cannot read file\n";
        return 1;
      }
      std::ostringstream text;
      text << in.rdbuf();
      const snipforge::SourceUnit unit = snipforge::ParseUnit(
          snipforge::WrapSnippet(text.str(),
                                 std::filesystem::path(tree_file).stem().string()));
      if (!unit.ok()) {
        std::cerr << tree_file << ":" << unit.status.line << ":"
                  << unit.status.column << ": error: " << unit.status.reason
                  << "\n";
        return 1;
      }
      std::cout << snipforge::StatementTreeToJson(unit);
      return 0;
    }
    SeedFromEnvironment(&config.seed);
    config.corpus_dir = corpus_dir;
    config.out_dir = out_dir;
    config.validity_mode = validity == "external"
                               ? snipforge::ValidityMode::kExternal
                               : snipforge::ValidityMode::kProxy;
    if (!compiler_cmd.empty()) config.compiler_cmd = compiler_cmd;
    config.sampling = sampling == "per-file"
                          ? snipforge::SamplingMode::kPerFile
                          : snipforge::SamplingMode::kGlobalPool;
    const snipforge::RunArtifacts artifacts = snipforge::RunPipeline(config);
    for (const std::string& notice : artifacts.summary.notices) {
      std::cerr << "notice: " << notice << "\n";
    }
    std::cerr << "wrote " << artifacts.files.size() << " artifacts to "
              << out_dir << " (" << artifacts.summary.retained << " of "
              << artifacts.summary.drawn << " patches retained)\n";
    return 0;
  } catch (const snipforge::Error& e) {
    std::cerr << "snipforge: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "snipforge: " << e.what() << "\n";
    return 1;
  }
}
