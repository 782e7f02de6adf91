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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "simdiff/weighting.hpp"

namespace simdiff {

std::string_view tool_version();

// Everything besides the inputs that a run depends on.
struct ReportMetadata {
  std::string dictionary_path;
  std::string dictionary_sha256;
  std::string dictionary_level;  // "lemma": entries re-keyed by lemma on load
  std::string composition;
  double epsilon_floor = 0;
  double normalization_factor = 0;
  double presence_value = 0;
  std::string clamp_rule;
  std::string frequency_units;
  std::string tool_version;
  std::string timestamp;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct AnalysisReport {
  std::string doc1_id;
  std::string doc2_id;
  WeightScheme scheme;
  // Ranked lists keyed by n-gram order.
  std::map<int, std::vector<WeightedNGram>> per_n;
  ReportMetadata metadata;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// UTC ISO-8601 time of now, or of $SOURCE_DATE_EPOCH when it is set.
std::string current_timestamp();

// Pretty-printed JSON with a fixed key order. Doubles round-trip exactly.
std::string to_json(const AnalysisReport& report);

// Throws Error(kParse) on malformed or incomplete input.
AnalysisReport from_json(std::string_view json);

// Header `ngram,f1,f2,fe,entity,noun_chunk,weight`, one CRLF-terminated row
// per n-gram in ranked order, RFC 4180 quoting. Throws Error(kMissingOrder)
// when the report has no list for `n`.
std::string to_csv(const AnalysisReport& report, int n);

}  // namespace simdiff
