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

#include "simdiff/text/spans.hpp"

#include <algorithm>
#include <fstream>

#include "simdiff/error.hpp"
#include "simdiff/text/tokenizer.hpp"
#include "simdiff/unicode.hpp"

namespace simdiff::text {
namespace {

bool is_nominal(PosTag tag) { return tag == PosTag::NOUN || tag == PosTag::PROPN; }

bool is_modifier(PosTag tag) { return tag == PosTag::ADJ || is_nominal(tag); }

std::vector<TokenRange> merge_overlapping(std::vector<TokenRange> spans) {
  std::sort(spans.begin(), spans.end(), [](const TokenRange& a, const TokenRange& b) {
    return a.begin != b.begin ? a.begin < b.begin : a.end > b.end;
  });
  std::vector<TokenRange> merged;
  for (const TokenRange& span : spans) {
    if (!merged.empty() && span.begin < merged.back().end) {
      merged.back().end = std::max(merged.back().end, span.end);
    } else {
      merged.push_back(span);
    }
  }
  return merged;
}

}  // namespace

std::vector<TokenRange> extract_noun_chunks(std::span<const PosTag> tags) {
  std::vector<TokenRange> chunks;
  std::size_t i = 0;
  while (i < tags.size()) {
    std::size_t j = i;
    if (tags[j] == PosTag::DET) ++j;
    std::size_t last_head = 0;
    bool has_head = false;
    for (std::size_t k = j; k < tags.size() && is_modifier(tags[k]); ++k) {
      if (is_nominal(tags[k])) {
        last_head = k;
        has_head = true;
      }
    }
    if (has_head) {
      chunks.push_back({i, last_head + 1});
      i = last_head + 1;
    } else {
      ++i;
    }
  }
  return chunks;
}

Gazetteer Gazetteer::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "gazetteer not found: " + path.string());
  Gazetteer gazetteer;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    gazetteer.add(line);
  }
  return gazetteer;
}

void Gazetteer::add(std::string_view surface) {
  const std::string normalized = unicode::nfc(surface);
  const TokenizedText tokens = tokenize(normalized);
  std::vector<std::string> entry;
  entry.reserve(tokens.tokens.size());
  for (const Token& token : tokens.tokens) entry.push_back(unicode::to_lower(token.surface));
  entries_.push_back(std::move(entry));
}

std::vector<TokenRange> detect_entities(std::span<const Token> sentence,
                                        std::span<const PosTag> tags,
                                        const CaseEvidence& evidence,
                                        const Gazetteer& gazetteer) {
  std::vector<TokenRange> spans;
  const std::size_t first = first_word_index(sentence);
  std::size_t i = 0;
  while (i < tags.size()) {
    if (tags[i] != PosTag::PROPN) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < tags.size() && tags[j] == PosTag::PROPN) ++j;
    const bool lone_initial = (j - i == 1) && i == first &&
                              evidence.seen_lowercase(unicode::to_lower(sentence[i].surface));
    if (!lone_initial) spans.push_back({i, j});
    i = j;
  }

  if (!gazetteer.empty()) {
    std::vector<std::string> lower;
    lower.reserve(sentence.size());
    for (const Token& token : sentence) lower.push_back(unicode::to_lower(token.surface));
    for (const auto& entry : gazetteer.entries()) {
      if (entry.empty() || entry.size() > lower.size()) continue;
      for (std::size_t start = 0; start + entry.size() <= lower.size(); ++start) {
        if (std::equal(entry.begin(), entry.end(), lower.begin() + static_cast<std::ptrdiff_t>(start))) {
          spans.push_back({start, start + entry.size()});
        }
      }
    }
  }
  return merge_overlapping(std::move(spans));
}

}  // namespace simdiff::text
