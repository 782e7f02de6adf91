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

#include <string>

#include "simdiff/report.hpp"

namespace simdiff::testing {

// Report with `terms` ranked unigrams of distinct, mostly decreasing
// weights (a few ties) and a fixed timestamp.
inline AnalysisReport fixture_report(std::size_t terms, int n = 1) {
  static const char* const kWords[] = {
      "theory", "universe", "energy", "relativity", "physics", "gravity", "light", "quantum", "field", "mass",
      "photon", "atom", "hole", "radiation", "cosmology", "particle", "wave", "space", "time", "motion",
      "electron", "nucleus", "orbit", "star", "galaxy", "planet", "spin", "charge", "force", "vacuum",
      "entropy", "heat", "frequency", "spectrum", "lens", "clock", "signal", "matter", "curvature", "horizon",
      "singularity", "equation", "constant", "symmetry", "boson", "neutron", "proton", "lattice", "crystal", "plasma"};
  AnalysisReport r;
  r.doc1_id = "wikipedia:Albert_Einstein";
  r.doc2_id = "wikipedia:Stephen_Hawking";
  r.metadata.dictionary_path = "dict.tsv";
  r.metadata.dictionary_sha256 = std::string(64, 'a');
  r.metadata.dictionary_level = "lemma";
  r.metadata.composition = "independence_product";
  r.metadata.epsilon_floor = 1e-9;
  r.metadata.normalization_factor = 1e6;
  r.metadata.presence_value = 0.5;
  r.metadata.clamp_rule = "log: max(0, raw)";
  r.metadata.frequency_units = "relative";
  r.metadata.tool_version = "test";
  r.metadata.timestamp = "2026-01-01T00:00:00Z";
  auto& list = r.per_n[n];
  for (std::size_t i = 0; i < terms; ++i) {
    WeightedNGram w;
    for (int k = 0; k < n; ++k) w.gram.lemmas.emplace_back(kWords[(i + static_cast<std::size_t>(k)) % 50]);
    w.f1 = 0.001 * static_cast<double>(terms - i);
    w.f2 = 0.0005 * static_cast<double>(terms - i);
    w.fe = 1e-6 * static_cast<double>(i + 1);
    w.is_entity = i % 7 == 0;
    w.is_noun_chunk = i % 3 == 0;
    // Pairs of equal weights every tenth rank.
    w.weight = 100.0 / static_cast<double>(1 + i - (i % 10 == 1 ? 1 : 0));
    list.push_back(w);
  }
  rank(list);
  return r;
}

}  // namespace simdiff::testing
