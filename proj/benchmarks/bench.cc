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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "snipforge/corpus.h"
#include "snipforge/rules.h"
#include "snipforge/sampler.h"
#include "snipforge/tokenizer.h"
#include "snipforge/validity.h"

namespace {

std::string ArrayCopyLoop() {
  std::ifstream in(std::filesystem::path(SNIPFORGE_FIXTURE_DIR) / "swap_golden" /
                   "ArrayRemove.java");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

const snipforge::Corpus& Synthetic() {
  static const snipforge::Corpus corpus = snipforge::BuildCorpus(
      std::filesystem::path(SNIPFORGE_FIXTURE_DIR) / "synthetic");
  return corpus;
}

void BM_Tokenize(benchmark::State& state) {
  const std::string text = ArrayCopyLoop();
  for (auto _ : state) benchmark::DoNotOptimize(snipforge::Tokenize(text));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Tokenize);

void BM_Parse(benchmark::State& state) {
  const std::string text = ArrayCopyLoop();
  for (auto _ : state) benchmark::DoNotOptimize(snipforge::ParseSource(text));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Parse);

void BM_CheckValidity(benchmark::State& state) {
  const snipforge::SourceUnit unit = snipforge::ParseSource(ArrayCopyLoop());
  for (auto _ : state) benchmark::DoNotOptimize(snipforge::CheckValidity(unit));
}
BENCHMARK(BM_CheckValidity);

void BM_Analyze(benchmark::State& state) {
  const snipforge::SourceUnit unit = snipforge::ParseSource(ArrayCopyLoop());
  for (auto _ : state) benchmark::DoNotOptimize(snipforge::Analyze(unit));
}
BENCHMARK(BM_Analyze);

void BM_SamplePatches(benchmark::State& state) {
  const snipforge::SamplerConfig config{
      .seed = 1,
      .n_line = static_cast<int>(state.range(0)),
      .n_stmt = static_cast<int>(state.range(0)),
      .jobs = static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(snipforge::SamplePatches(Synthetic(), config));
  }
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_SamplePatches)
    ->Args({500, 1})
    ->Args({500, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
