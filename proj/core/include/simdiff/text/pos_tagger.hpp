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

#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "simdiff/text/types.hpp"

namespace simdiff::text {

// Document-wide capitalization statistics used to decide whether a
// capitalized sentence-initial word is a name.
class CaseEvidence {
 public:
  CaseEvidence() = default;
  CaseEvidence(std::span<const Token> tokens, std::span<const TokenRange> sentences);

  // The lowercase form occurs written in lowercase somewhere.
  bool seen_lowercase(std::string_view lower) const { return lowercase_.contains(std::string(lower)); }
  // The word occurs capitalized somewhere other than sentence-initially.
  bool seen_capitalized_inside(std::string_view lower) const {
    return capitalized_inside_.contains(std::string(lower));
  }

 private:
  std::unordered_set<std::string> lowercase_;
  std::unordered_set<std::string> capitalized_inside_;
};

// Index of the first non-punctuation token of the sentence, relative to the
// sentence start, or sentence.size() if there is none.
std::size_t first_word_index(std::span<const Token> sentence);

// Context-free tag for one lowercase word: closed-class lexicon, then the
// open-class lexicons, then suffix rules, defaulting to NOUN.
PosTag tag_word(std::string_view lower);

// Tags one sentence. Closed-class words come from a fixed lexicon;
// capitalized words inside the sentence are PROPN; a capitalized
// sentence-initial word is PROPN only when `evidence` shows it capitalized
// elsewhere and never in lowercase. Everything else goes through tag_word.
std::vector<PosTag> pos_tag(std::span<const Token> sentence, const CaseEvidence& evidence = {});

}  // namespace simdiff::text
