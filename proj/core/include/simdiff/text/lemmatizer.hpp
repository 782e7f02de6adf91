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
#include <string>
#include <string_view>
#include <unordered_map>

#include "simdiff/text/types.hpp"

namespace simdiff::text {

// Rule-based English lemmatizer: an exception lexicon (irregular forms,
// uninflected -s words) in front of Porter-style inflectional stripping.
//
// Output is lowercase and idempotent: lemmatize(lemmatize(w, p), p) ==
// lemmatize(w, p) for every word and tag.
class Lemmatizer {
 public:
  // Loaded with the built-in exception lexicon.
  Lemmatizer();

  // Reads `surface<TAB>lemma` lines; `#` starts a comment line. Entries
  // override the built-in lexicon. Throws kFileNotFound or kParse.
  void load_exceptions(const std::filesystem::path& path);

  // Applies to every part of speech.
  void add_exception(std::string_view surface, std::string_view lemma);

  std::string lemmatize(std::string_view surface, PosTag pos) const;

 private:
  std::string lemmatize_once(const std::string& lower, PosTag pos) const;
  std::string resolve(const std::string& lemma) const;

  std::unordered_map<std::string, std::string> general_;
  std::unordered_map<std::string, std::string> verb_only_;
};

}  // namespace simdiff::text
