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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "simdiff/text/types.hpp"

namespace simdiff {

// A contiguous sequence of 1 to 3 lemmas. Ordered lexicographically by
// lemma sequence.
struct NGram {
  std::vector<std::string> lemmas;

  std::size_t order() const noexcept { return lemmas.size(); }
  // Lemmas joined by single spaces.
  std::string joined() const;

  friend auto operator<=>(const NGram&, const NGram&) = default;
  friend bool operator==(const NGram&, const NGram&) = default;
};

struct NGramStats {
  std::uint64_t count = 0;
  // Some occurrence lies inside (or equals) an entity span.
  bool is_entity = false;
  // Some occurrence lies inside (or equals) a noun-chunk span.
  bool is_noun_chunk = false;

  friend bool operator==(const NGramStats&, const NGramStats&) = default;
};

struct NGramTable {
  std::string doc_id;
  int n = 1;
  std::map<NGram, NGramStats> entries;
  std::uint64_t total = 0;

  // count / total, or 0 for an absent n-gram.
  double relative_frequency(const NGram& gram) const;
};

inline constexpr int kMinOrder = 1;
inline constexpr int kMaxOrder = 3;

// Counts windows of n consecutive non-punctuation lemmas inside each
// sentence. Punctuation is skipped, so "black hole," and "black hole" give
// the same bigram; windows never cross a sentence boundary.
// Throws Error(kOrderOutOfRange) unless 1 <= n <= 3.
NGramTable extract_ngrams(const ProcessedDocument& doc, int n);

// Key-set intersection in ascending order. Throws Error(kOrderMismatch).
std::vector<NGram> common_ngrams(const NGramTable& a, const NGramTable& b);

}  // namespace simdiff
