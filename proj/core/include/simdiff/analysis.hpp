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

#include <vector>

#include "simdiff/freq_dict.hpp"
#include "simdiff/report.hpp"
#include "simdiff/text/types.hpp"
#include "simdiff/weighting.hpp"

namespace simdiff {

struct AnalysisOptions {
  WeightScheme scheme;
  std::vector<int> orders = {1, 2, 3};
};

// Extracts n-grams of each requested order from both documents, scores the
// common ones against `dict`, and collects the ranked lists. Orders are
// analysed concurrently; the result does not depend on scheduling. The
// metadata timestamp is current_timestamp().
AnalysisReport analyze(const ProcessedDocument& doc1, const ProcessedDocument& doc2,
                       const FrequencyDictionary& dict, const AnalysisOptions& options);

}  // namespace simdiff
