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

#include "simdiff/text/pipeline.hpp"

#include <span>

#include "simdiff/text/pos_tagger.hpp"
#include "simdiff/text/tokenizer.hpp"
#include "simdiff/unicode.hpp"

namespace simdiff::text {
namespace {

void shift(std::vector<TokenRange>& ranges, std::size_t offset) {
  for (TokenRange& r : ranges) {
    r.begin += offset;
    r.end += offset;
  }
}

}  // namespace

ProcessedDocument Pipeline::process(const RawDocument& raw) const {
  ProcessedDocument doc;
  doc.id = raw.id;
  doc.text = unicode::nfc(raw.text);

  TokenizedText tokenized = tokenize(doc.text);
  doc.tokens = std::move(tokenized.tokens);
  doc.sentences = std::move(tokenized.sentences);

  const CaseEvidence evidence(doc.tokens, doc.sentences);
  for (const TokenRange& range : doc.sentences) {
    std::span<Token> sentence(doc.tokens.data() + range.begin, range.size());
    const std::vector<PosTag> tags = pos_tag(sentence, evidence);
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      sentence[i].pos = tags[i];
      sentence[i].lemma = lemmatizer_.lemmatize(sentence[i].surface, tags[i]);
    }
    auto chunks = extract_noun_chunks(tags);
    auto entities = detect_entities(sentence, tags, evidence, gazetteer_);
    shift(chunks, range.begin);
    shift(entities, range.begin);
    doc.noun_chunks.insert(doc.noun_chunks.end(), chunks.begin(), chunks.end());
    doc.entities.insert(doc.entities.end(), entities.begin(), entities.end());
  }
  return doc;
}

std::string Pipeline::lemmatize_word(std::string_view word) const {
  const std::string lower = unicode::to_lower(unicode::nfc(word));
  return lemmatizer_.lemmatize(lower, tag_word(lower));
}

}  // namespace simdiff::text
