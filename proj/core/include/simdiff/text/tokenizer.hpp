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

#include "simdiff/text/types.hpp"

namespace simdiff::text {

struct TokenizedText {
  std::vector<Token> tokens;
  std::vector<TokenRange> sentences;
};

// Splits `text` into word, number, clitic and single-character punctuation
// tokens. Whitespace is the only inter-token gap, so surfaces plus gaps
// reproduce the input exactly. Only `surface`, `span` and `sentence_index`
// are filled in.
//
// A sentence ends at `.`, `!` or `?` (plus any closing quotes or brackets)
// when the following gap is whitespace and the next token starts with an
// uppercase letter, unless the period follows a known abbreviation or a
// single-letter initial. A blank line always ends a sentence.
//
// Throws Error(kEmptyInput) if `text` is empty or whitespace only.
TokenizedText tokenize(std::string_view text);

bool is_abbreviation(std::string_view word);

}  // namespace simdiff::text
