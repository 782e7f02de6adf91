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

#include "simdiff/text/types.hpp"

namespace simdiff {

std::string_view source_kind_name(SourceKind kind) {
  switch (kind) {
    case SourceKind::kFile: return "file";
    case SourceKind::kGutenberg: return "gutenberg";
    case SourceKind::kWikipedia: return "wikipedia";
  }
  return "file";
}

std::string_view pos_tag_name(PosTag tag) {
  switch (tag) {
    case PosTag::NOUN: return "NOUN";
    case PosTag::PROPN: return "PROPN";
    case PosTag::VERB: return "VERB";
    case PosTag::ADJ: return "ADJ";
    case PosTag::DET: return "DET";
    case PosTag::ADP: return "ADP";
    case PosTag::PRON: return "PRON";
    case PosTag::NUM: return "NUM";
    case PosTag::PUNCT: return "PUNCT";
    case PosTag::OTHER: return "OTHER";
  }
  return "OTHER";
}

}  // namespace simdiff
