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

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "simdiff/text/pos_tagger.hpp"
#include "simdiff/text/types.hpp"

namespace simdiff::text {

// Noun chunks over one tagged sentence, as ranges relative to the sentence
// start. Matches (DET)? (ADJ|NOUN|PROPN)* (NOUN|PROPN), greedy
// longest-match, left to right, non-overlapping.
std::vector<TokenRange> extract_noun_chunks(std::span<const PosTag> tags);

// Entity surfaces, each stored as its lowercase token sequence.
class Gazetteer {
 public:
  Gazetteer() = default;

  // One entity surface per line; blank lines and `#` lines are skipped.
  static Gazetteer load(const std::filesystem::path& path);

  void add(std::string_view surface);
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<std::vector<std::string>>& entries() const noexcept { return entries_; }

 private:
  std::vector<std::vector<std::string>> entries_;
};

// Named-entity spans over one tagged sentence, relative to the sentence
// start: maximal runs of PROPN, minus a lone sentence-initial token whose
// lowercase form appears lowercase elsewhere in the document. Gazetteer
// matches are added and overlapping spans merged into their union.
std::vector<TokenRange> detect_entities(std::span<const Token> sentence,
                                        std::span<const PosTag> tags,
                                        const CaseEvidence& evidence = {},
                                        const Gazetteer& gazetteer = {});

}  // namespace simdiff::text
