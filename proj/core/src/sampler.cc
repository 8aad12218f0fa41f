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

#include "snipforge/sampler.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_set>

namespace snipforge {
namespace {

constexpr std::array<EditKind, 4> kLineKinds = {
    EditKind::kCopyLine, EditKind::kDeleteLine, EditKind::kReplaceLine,
    EditKind::kSwapLine};
constexpr std::array<EditKind, 4> kStmtKinds = {
    EditKind::kCopyStmt, EditKind::kDeleteStmt, EditKind::kReplaceStmt,
    EditKind::kSwapStmt};

// Unbiased value in [0, n), independent of the standard library's
// distribution implementations.
std::size_t Pick(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return static_cast<std::size_t>(r % bound);
  }
}

struct Pool {
  std::vector<std::size_t> entries;
  std::vector<std::vector<Locator>> targets;  // parallel to entries
};

Pool BuildPool(const Corpus& corpus, Granularity granularity,
               std::vector<std::string>* notices) {
  Pool pool;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    try {
      pool.targets.push_back(EnumerateTargets(corpus.entries[i].unit,
                                              granularity));
      pool.entries.push_back(i);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoTargets) throw;
      notices->push_back(std::string("skipped ") +
                         corpus.entries[i].snippet.id + ": " + e.what());
    }
  }
  return pool;
}

Draw MakeDraw(const Corpus& corpus, const Pool& pool, std::size_t slot,
              const std::array<EditKind, 4>& kinds, std::mt19937_64& rng) {
  const std::vector<Locator>& targets = pool.targets[slot];
  Edit edit;
  edit.kind = kinds[Pick(rng, kinds.size())];
  edit.target = targets[Pick(rng, targets.size())];
  if (NeedsSource(edit.kind)) edit.source = targets[Pick(rng, targets.size())];
  const std::size_t entry = pool.entries[slot];
  return {entry, MakePatch(corpus.entries[entry].snippet.id, std::move(edit))};
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Validator ProxyValidator() {
  return [](const SourceUnit& unit) { return CheckValidity(unit); };
}

DrawResult DrawPatches(const Corpus& corpus, const SamplerConfig& config) {
  if (config.n_line < 0 || config.n_stmt < 0) {
    throw Error(ErrorCode::kInvalidConfig, "draw counts must be >= 0");
  }
  if (corpus.entries.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus has no accepted units");
  }
  DrawResult result;
  std::uint64_t index = 0;
  auto run = [&](Granularity granularity, int count,
                 const std::array<EditKind, 4>& kinds) {
    if (count == 0) return;
    const Pool pool = BuildPool(corpus, granularity, &result.notices);
    if (pool.entries.empty()) return;
    auto one = [&](std::size_t slot_hint, bool fixed_slot) {
      std::mt19937_64 rng(SplitMix64(config.seed ^ SplitMix64(index++)));
      const std::size_t slot =
          fixed_slot ? slot_hint : Pick(rng, pool.entries.size());
      result.draws.push_back(MakeDraw(corpus, pool, slot, kinds, rng));
    };
    if (config.mode == SamplingMode::kGlobalPool) {
      for (int i = 0; i < count; ++i) one(0, false);
    } else {
      for (std::size_t slot = 0; slot < pool.entries.size(); ++slot) {
        for (int i = 0; i < count; ++i) one(slot, true);
      }
    }
  };
  run(Granularity::kLine, config.n_line, kLineKinds);
  run(Granularity::kStatement, config.n_stmt, kStmtKinds);
  return result;
}

std::vector<Draw> Deduplicate(const std::vector<Draw>& draws) {
  std::unordered_set<std::string> seen;
  std::vector<Draw> kept;
  for (const Draw& d : draws) {
    if (seen.insert(d.patch.canonical).second) kept.push_back(d);
  }
  return kept;
}

PatchOutcome EvaluatePatch(const CorpusEntry& entry, const Patch& patch,
                           const Validator& validator) {
  PatchOutcome outcome;
  outcome.patch = patch;
  outcome.patched_text = ApplyPatch(entry.unit, patch);
  const SourceUnit patched =
      ParseSource(outcome.patched_text, entry.snippet.id);
  outcome.parse_status = patched.status;
  outcome.validity = validator ? validator(patched) : CheckValidity(patched);
  outcome.violations = Analyze(patched);
  return outcome;
}

SampleResult SamplePatches(const Corpus& corpus, const SamplerConfig& config) {
  DrawResult drawn = DrawPatches(corpus, config);
  SampleResult result;
  result.drawn = drawn.draws.size();
  result.notices = std::move(drawn.notices);
  const std::vector<Draw> kept = Deduplicate(drawn.draws);
  result.duplicates = result.drawn - kept.size();
  result.outcomes.resize(kept.size());

  const Validator validator =
      config.validator ? config.validator : ProxyValidator();
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= kept.size()) return;
      try {
        result.outcomes[i] =
            EvaluatePatch(corpus.entries[kept[i].entry], kept[i].patch,
                          validator);
        result.outcomes[i].entry = kept[i].entry;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(kept.size());
      }
    }
  };
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1 || kept.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> threads;
    const std::size_t n =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), kept.size());
    for (std::size_t t = 0; t < n; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

ValidityRates ComputeValidityRates(const std::vector<PatchOutcome>& outcomes) {
  if (outcomes.empty()) {
    throw Error(ErrorCode::kInvalidInput, "no outcomes to rate");
  }
  ValidityRates rates;
  for (const PatchOutcome& o : outcomes) {
    const bool valid = o.validity.valid();
    if (o.granularity() == Granularity::kLine) {
      ++rates.line_total;
      rates.line_valid += valid ? 1 : 0;
    } else {
      ++rates.stmt_total;
      rates.stmt_valid += valid ? 1 : 0;
    }
  }
  rates.line_rate = Rational(rates.line_valid, rates.line_total);
  rates.stmt_rate = Rational(rates.stmt_valid, rates.stmt_total);
  rates.overall_rate = Rational(rates.line_valid + rates.stmt_valid,
                                rates.line_total + rates.stmt_total);
  return rates;
}

}  // namespace snipforge
