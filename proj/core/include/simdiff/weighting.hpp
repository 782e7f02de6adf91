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

#include <string_view>
#include <vector>

#include "simdiff/freq_dict.hpp"
#include "simdiff/ngram.hpp"

namespace simdiff {

// Inputs shared by all schemes: f1 and f2 are relative frequencies in the
// two documents, in (0, 1]; fe is the English baseline, in (0, 1). Any
// input outside its range throws Error(kDomain). Logarithms are natural.

// (f1 - fe)^2 * (f2 - fe)^2
double weight_basic(double f1, double f2, double fe);

// f1 ln(f1/fe) + f2 ln(f2/fe), unclamped; negative when both f < fe.
double weight_log_raw(double f1, double f2, double fe);

// weight_log_raw clamped at 0.
double weight_log(double f1, double f2, double fe);

// 0 if fe > min(f1, f2) or f1 = f2 = fe, else
// ln(f1 + 1) e^f2 / (sqrt(fe) + 1).
// Not symmetric in f1 and f2.
double weight_threshold(double f1, double f2, double fe);

inline constexpr double kDefaultNormalizationFactor = 1e6;
inline constexpr double kDefaultPresenceValue = 0.5;

// 1 + 0.5 (E + C), where E and C are `presence` when the flag is set.
double base_multiplier(bool is_entity, bool is_noun_chunk, double presence = kDefaultPresenceValue);

// ((f1 - fe)^2 nf + (f2 - fe)^2 nf) * base_multiplier. nf must be finite
// and positive.
double weight_final(double f1, double f2, double fe, bool is_entity, bool is_noun_chunk,
                    double nf = kDefaultNormalizationFactor,
                    double presence = kDefaultPresenceValue);

enum class SchemeKind { kBasic, kLog, kThreshold, kFinal };

std::string_view scheme_name(SchemeKind kind);
SchemeKind parse_scheme(std::string_view name);

struct WeightScheme {
  SchemeKind kind = SchemeKind::kFinal;
  double normalization_factor = kDefaultNormalizationFactor;
  // Value of Entity/Noun Chunk Presence when the flag is set.
  double presence_value = kDefaultPresenceValue;

  friend bool operator==(const WeightScheme&, const WeightScheme&) = default;
};

struct WeightedNGram {
  NGram gram;
  double f1 = 0;
  double f2 = 0;
  double fe = 0;
  bool is_entity = false;
  bool is_noun_chunk = false;
  double weight = 0;

  friend bool operator==(const WeightedNGram&, const WeightedNGram&) = default;
};

double apply_scheme(const WeightScheme& scheme, double f1, double f2, double fe, bool is_entity,
                    bool is_noun_chunk);

// Descending by weight, ties by ascending lemma sequence.
void rank(std::vector<WeightedNGram>& grams);

// Scores every common n-gram of t1 and t2. Flags are OR-ed across the two
// documents. Result is ranked. Throws kOrderMismatch or kDomain.
std::vector<WeightedNGram> score_common(const NGramTable& t1, const NGramTable& t2,
                                        const FrequencyDictionary& dict, const WeightScheme& scheme);

}  // namespace simdiff
