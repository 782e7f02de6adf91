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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace simdiff {

enum class SourceKind { kFile, kGutenberg, kWikipedia };

std::string_view source_kind_name(SourceKind kind);

struct RawDocument {
  std::string id;
  std::string text;
  SourceKind source = SourceKind::kFile;
};

enum class PosTag : std::uint8_t { NOUN, PROPN, VERB, ADJ, DET, ADP, PRON, NUM, PUNCT, OTHER };

std::string_view pos_tag_name(PosTag tag);

// Half-open byte range into a document's normalized text.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

// Half-open range of token indices.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  bool contains(const TokenRange& inner) const noexcept {
    return begin <= inner.begin && inner.end <= end;
  }

  friend bool operator==(const TokenRange&, const TokenRange&) = default;
};

struct Token {
  std::string surface;
  std::string lemma;
  PosTag pos = PosTag::OTHER;
  CharSpan span;
  std::size_t sentence_index = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Output of the text pipeline. `text` is the NFC-normalized input that all
// token spans index into.
struct ProcessedDocument {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  std::vector<TokenRange> sentences;
  std::vector<TokenRange> noun_chunks;
  std::vector<TokenRange> entities;

  friend bool operator==(const ProcessedDocument&, const ProcessedDocument&) = default;
};

}  // namespace simdiff
