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

#include "simdiff/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simdiff/error.hpp"

namespace simdiff {
namespace {

void check_inputs(double f1, double f2, double fe) {
  auto doc_freq_ok = [](double f) { return f > 0.0 && f <= 1.0; };
  if (!doc_freq_ok(f1) || !doc_freq_ok(f2)) {
    throw Error(ErrorCode::kDomain, "document frequencies must lie in (0, 1], got f1=" +
                                        std::to_string(f1) + " f2=" + std::to_string(f2));
  }
  if (!(fe > 0.0 && fe < 1.0)) {
    throw Error(ErrorCode::kDomain, "baseline frequency must lie in (0, 1), got " + std::to_string(fe));
  }
}

}  // namespace

double weight_basic(double f1, double f2, double fe) {
  check_inputs(f1, f2, fe);
  const double d1 = f1 - fe;
  const double d2 = f2 - fe;
  const double product = d1 * d2;
  return product * product;
}

double weight_log_raw(double f1, double f2, double fe) {
  check_inputs(f1, f2, fe);
  return f1 * std::log(f1 / fe) + f2 * std::log(f2 / fe);
}

double weight_log(double f1, double f2, double fe) {
  return std::max(0.0, weight_log_raw(f1, f2, fe));
}

double weight_threshold(double f1, double f2, double fe) {
  check_inputs(f1, f2, fe);
  // No signal above the baseline in either document.
  if (f1 == fe && f2 == fe) return 0.0;
  const double threshold = std::min({f1, f2, fe});
  if (fe > threshold) return 0.0;
  return std::log1p(f1) * std::exp(f2) / (std::sqrt(fe) + 1.0);
}

double base_multiplier(bool is_entity, bool is_noun_chunk, double presence) {
  const double entity = is_entity ? presence : 0.0;
  const double chunk = is_noun_chunk ? presence : 0.0;
  return 1.0 + 0.5 * (entity + chunk);
}

double weight_final(double f1, double f2, double fe, bool is_entity, bool is_noun_chunk, double nf,
                    double presence) {
  check_inputs(f1, f2, fe);
  if (!(nf > 0.0) || !std::isfinite(nf)) {
    throw Error(ErrorCode::kDomain, "normalization factor must be positive and finite");
  }
  if (!(presence >= 0.0) || !std::isfinite(presence)) {
    throw Error(ErrorCode::kDomain, "presence value must be non-negative and finite");
  }
  const double delta1 = (f1 - fe) * (f1 - fe) * nf;
  const double delta2 = (f2 - fe) * (f2 - fe) * nf;
  return (delta1 + delta2) * base_multiplier(is_entity, is_noun_chunk, presence);
}

std::string_view scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kBasic: return "basic";
    case SchemeKind::kLog: return "log";
    case SchemeKind::kThreshold: return "threshold";
    case SchemeKind::kFinal: return "final";
  }
  return "final";
}

SchemeKind parse_scheme(std::string_view name) {
  if (name == "basic") return SchemeKind::kBasic;
  if (name == "log") return SchemeKind::kLog;
  if (name == "threshold") return SchemeKind::kThreshold;
  if (name == "final") return SchemeKind::kFinal;
  throw Error(ErrorCode::kInvalidArgument, "unknown weighting scheme: " + std::string(name));
}

double apply_scheme(const WeightScheme& scheme, double f1, double f2, double fe, bool is_entity,
                    bool is_noun_chunk) {
  switch (scheme.kind) {
    case SchemeKind::kBasic: return weight_basic(f1, f2, fe);
    case SchemeKind::kLog: return weight_log(f1, f2, fe);
    case SchemeKind::kThreshold: return weight_threshold(f1, f2, fe);
    case SchemeKind::kFinal:
      return weight_final(f1, f2, fe, is_entity, is_noun_chunk, scheme.normalization_factor,
                          scheme.presence_value);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown weighting scheme");
}

void rank(std::vector<WeightedNGram>& grams) {
  std::sort(grams.begin(), grams.end(), [](const WeightedNGram& a, const WeightedNGram& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.gram < b.gram;
  });
}

std::vector<WeightedNGram> score_common(const NGramTable& t1, const NGramTable& t2,
                                        const FrequencyDictionary& dict, const WeightScheme& scheme) {
  const std::vector<NGram> common = common_ngrams(t1, t2);
  std::vector<WeightedNGram> out;
  out.reserve(common.size());
  for (const NGram& gram : common) {
    const NGramStats& s1 = t1.entries.at(gram);
    const NGramStats& s2 = t2.entries.at(gram);
    WeightedNGram w;
    w.gram = gram;
    w.f1 = t1.relative_frequency(gram);
    w.f2 = t2.relative_frequency(gram);
    w.fe = dict.baseline(gram);
    w.is_entity = s1.is_entity || s2.is_entity;
    w.is_noun_chunk = s1.is_noun_chunk || s2.is_noun_chunk;
    w.weight = apply_scheme(scheme, w.f1, w.f2, w.fe, w.is_entity, w.is_noun_chunk);
    out.push_back(std::move(w));
  }
  rank(out);
  return out;
}

}  // namespace simdiff
