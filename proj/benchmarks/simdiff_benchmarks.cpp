/*
 * Copyright 2026 The simdiff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <filesystem>

#include "simdiff/analysis.hpp"
#include "simdiff/freq_dict.hpp"
#include "simdiff/io.hpp"
#include "simdiff/ngram.hpp"
#include "simdiff/text/pipeline.hpp"
#include "simdiff/weighting.hpp"
#include "simdiff/wordcloud.hpp"

namespace {

namespace fs = std::filesystem;
using namespace simdiff;

const fs::path kData = SIMDIFF_DATA_DIR;

const std::string& snapshot(const char* name) {
  static std::map<std::string, std::string> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, read_file(kData / "snapshots/wikipedia" / (std::string(name) + ".txt"))).first;
  }
  return it->second;
}

const text::Pipeline& pipeline() {
  static const text::Pipeline p;
  return p;
}

const FrequencyDictionary& dictionary() {
  static const FrequencyDictionary d = load_dictionary(kData / "dict/en_wordfreq.tsv", pipeline());
  return d;
}

void BM_Pipeline(benchmark::State& state) {
  const RawDocument raw{"einstein", snapshot("Albert_Einstein"), SourceKind::kFile};
  for (auto _ : state) benchmark::DoNotOptimize(pipeline().process(raw));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * raw.text.size()));
}
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMillisecond);

void BM_ExtractNGrams(benchmark::State& state) {
  const auto doc = pipeline().process({"einstein", snapshot("Albert_Einstein"), SourceKind::kFile});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extract_ngrams(doc, n));
}
BENCHMARK(BM_ExtractNGrams)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_ScoreCommon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto t1 = extract_ngrams(pipeline().process({"a", snapshot("Albert_Einstein"), SourceKind::kFile}), n);
  const auto t2 = extract_ngrams(pipeline().process({"b", snapshot("Stephen_Hawking"), SourceKind::kFile}), n);
  const auto& dict = dictionary();
  for (auto _ : state) benchmark::DoNotOptimize(score_common(t1, t2, dict, WeightScheme{}));
}
BENCHMARK(BM_ScoreCommon)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_LoadDictionary(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load_dictionary(kData / "dict/en_wordfreq.tsv", pipeline()));
}
BENCHMARK(BM_LoadDictionary)->Unit(benchmark::kMillisecond);

void BM_AnalyzeAndRender(benchmark::State& state) {
  const auto d1 = pipeline().process({"a", snapshot("Lionel_Messi"), SourceKind::kFile});
  const auto d2 = pipeline().process({"b", snapshot("Cristiano_Ronaldo"), SourceKind::kFile});
  const auto& dict = dictionary();
  for (auto _ : state) {
    const AnalysisReport report = analyze(d1, d2, dict, {});
    benchmark::DoNotOptimize(render_wordcloud(report, 1, {}));
  }
}
BENCHMARK(BM_AnalyzeAndRender)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
