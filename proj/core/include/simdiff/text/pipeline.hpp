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

#include "simdiff/text/lemmatizer.hpp"
#include "simdiff/text/spans.hpp"
#include "simdiff/text/types.hpp"

namespace simdiff::text {

// Raw text to ProcessedDocument: NFC normalization, tokenization and
// sentence splitting, tagging, lemmatization, noun chunks and entities.
// A Pipeline is immutable once configured and may be shared across threads.
class Pipeline {
 public:
  Pipeline() = default;
  Pipeline(Lemmatizer lemmatizer, Gazetteer gazetteer)
      : lemmatizer_(std::move(lemmatizer)), gazetteer_(std::move(gazetteer)) {}

  // Throws Error(kEmptyInput) if the text is empty after trimming.
  ProcessedDocument process(const RawDocument& raw) const;

  // Lemma of a single out-of-context word, tagged with tag_word(). Used to
  // key frequency-list entries the same way document tokens are keyed.
  std::string lemmatize_word(std::string_view word) const;

  const Lemmatizer& lemmatizer() const noexcept { return lemmatizer_; }

 private:
  Lemmatizer lemmatizer_;
  Gazetteer gazetteer_;
};

}  // namespace simdiff::text
