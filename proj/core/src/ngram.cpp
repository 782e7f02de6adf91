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

#include "simdiff/ngram.hpp"

#include "simdiff/error.hpp"

namespace simdiff {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Maps each token to the index of the (non-overlapping) span holding it.
std::vector<std::size_t> span_membership(std::size_t token_count,
                                         const std::vector<TokenRange>& spans) {
  std::vector<std::size_t> owner(token_count, kNone);
  for (std::size_t s = 0; s < spans.size(); ++s) {
    for (std::size_t t = spans[s].begin; t < spans[s].end && t < token_count; ++t) owner[t] = s;
  }
  return owner;
}

}  // namespace

std::string NGram::joined() const {
  std::string out;
  for (const auto& lemma : lemmas) {
    if (!out.empty()) out.push_back(' ');
    out += lemma;
  }
  return out;
}

double NGramTable::relative_frequency(const NGram& gram) const {
  const auto it = entries.find(gram);
  if (it == entries.end() || total == 0) return 0.0;
  return static_cast<double>(it->second.count) / static_cast<double>(total);
}

NGramTable extract_ngrams(const ProcessedDocument& doc, int n) {
  if (n < kMinOrder || n > kMaxOrder) {
    throw Error(ErrorCode::kOrderOutOfRange,
                "n-gram order must be in [1, 3], got " + std::to_string(n));
  }
  NGramTable table;
  table.doc_id = doc.id;
  table.n = n;

  const auto entity_of = span_membership(doc.tokens.size(), doc.entities);
  const auto chunk_of = span_membership(doc.tokens.size(), doc.noun_chunks);
  const auto order = static_cast<std::size_t>(n);

  std::vector<std::size_t> words;
  for (const TokenRange& sentence : doc.sentences) {
    words.clear();
    for (std::size_t t = sentence.begin; t < sentence.end; ++t) {
      if (doc.tokens[t].pos != PosTag::PUNCT) words.push_back(t);
    }
    for (std::size_t w = 0; w + order <= words.size(); ++w) {
      NGram gram;
      gram.lemmas.reserve(order);
      for (std::size_t k = 0; k < order; ++k) gram.lemmas.push_back(doc.tokens[words[w + k]].lemma);
      const std::size_t first = words[w];
      const std::size_t last = words[w + order - 1];
      NGramStats& stats = table.entries[std::move(gram)];
      ++stats.count;
      stats.is_entity = stats.is_entity || (entity_of[first] != kNone && entity_of[first] == entity_of[last]);
      stats.is_noun_chunk =
          stats.is_noun_chunk || (chunk_of[first] != kNone && chunk_of[first] == chunk_of[last]);
      ++table.total;
    }
  }
  return table;
}

std::vector<NGram> common_ngrams(const NGramTable& a, const NGramTable& b) {
  if (a.n != b.n) {
    throw Error(ErrorCode::kOrderMismatch, "cannot intersect order " + std::to_string(a.n) +
                                               " with order " + std::to_string(b.n));
  }
  std::vector<NGram> out;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      out.push_back(ia->first);
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace simdiff
