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

#include "simdiff/analysis.hpp"

#include <future>
#include <set>

#include "simdiff/error.hpp"
#include "simdiff/ngram.hpp"

namespace simdiff {

AnalysisReport analyze(const ProcessedDocument& doc1, const ProcessedDocument& doc2,
                       const FrequencyDictionary& dict, const AnalysisOptions& options) {
  const std::set<int> orders(options.orders.begin(), options.orders.end());
  if (orders.empty()) throw Error(ErrorCode::kInvalidArgument, "no n-gram orders requested");
  for (int n : orders) {
    if (n < kMinOrder || n > kMaxOrder) {
      throw Error(ErrorCode::kOrderOutOfRange,
                  "n-gram order must be in [1, 3], got " + std::to_string(n));
    }
  }

  std::vector<std::pair<int, std::future<std::vector<WeightedNGram>>>> jobs;
  for (int n : orders) {
    jobs.emplace_back(n, std::async(std::launch::async, [&, n] {
                        const NGramTable t1 = extract_ngrams(doc1, n);
                        const NGramTable t2 = extract_ngrams(doc2, n);
                        return score_common(t1, t2, dict, options.scheme);
                      }));
  }

  AnalysisReport report;
  report.doc1_id = doc1.id;
  report.doc2_id = doc2.id;
  report.scheme = options.scheme;
  for (auto& [n, job] : jobs) report.per_n[n] = job.get();

  ReportMetadata& m = report.metadata;
  m.dictionary_path = dict.source().path;
  m.dictionary_sha256 = dict.source().sha256;
  m.dictionary_level = dict.source().lemmatized_on_load ? "surface entries lemmatized on load"
                                                        : "lemma entries";
  m.composition = composition_name(dict.composition());
  m.epsilon_floor = dict.epsilon_floor();
  m.normalization_factor = options.scheme.normalization_factor;
  m.presence_value = options.scheme.presence_value;
  m.clamp_rule = "log scheme: negative weights clamped to 0";
  m.frequency_units = "relative frequency in (0,1]";
  m.tool_version = std::string(tool_version());
  m.timestamp = current_timestamp();
  return report;
}

}  // namespace simdiff
