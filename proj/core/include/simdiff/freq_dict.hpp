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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>

#include "simdiff/ngram.hpp"
#include "simdiff/text/pipeline.hpp"

namespace simdiff {

// How the baseline of a multi-word n-gram is derived from its unigrams.
enum class Composition { kIndependenceProduct, kMinUnigram };

std::string_view composition_name(Composition composition);
// Accepts "product"/"independence_product" and "min"/"min_unigram".
Composition parse_composition(std::string_view name);

inline constexpr double kDefaultEpsilonFloor = 1e-9;
inline constexpr std::size_t kMinDictionaryEntries = 1000;

// A comment line marking a file whose tokens are already pipeline lemmas
// (as written by build_dictionary); such files are not re-lemmatized.
inline constexpr std::string_view kLemmaDirective = "# simdiff-dictionary: lemmas";

struct DictionarySource {
  std::string path;
  std::string sha256;
  std::size_t raw_entries = 0;
  bool lemmatized_on_load = false;
};

// English baseline frequencies keyed by lemma. Immutable after loading.
class FrequencyDictionary {
 public:
  // Normalizes lemma counts to relative frequencies. Throws
  // kInvalidArgument if the counts are empty or all zero, or if
  // epsilon_floor is not in (0, min stored frequency].
  static FrequencyDictionary from_counts(const std::map<std::string, std::uint64_t>& lemma_counts,
                                         double epsilon_floor = kDefaultEpsilonFloor,
                                         Composition composition = Composition::kIndependenceProduct);

  double unigram(std::string_view lemma) const;

  // f_e for an n-gram; always > 0.
  double baseline(const NGram& gram) const;

  double epsilon_floor() const noexcept { return epsilon_floor_; }
  Composition composition() const noexcept { return composition_; }
  std::size_t size() const noexcept { return freq_.size(); }
  const DictionarySource& source() const noexcept { return source_; }

  const std::unordered_map<std::string, double>& frequencies() const noexcept { return freq_; }

 private:
  friend FrequencyDictionary load_dictionary(const std::filesystem::path&, const text::Pipeline&,
                                             double, Composition);

  std::unordered_map<std::string, double> freq_;
  double epsilon_floor_ = kDefaultEpsilonFloor;
  Composition composition_ = Composition::kIndependenceProduct;
  DictionarySource source_;
};

// Reads `token<TAB>count` lines (`#` lines skipped). Tokens are lemmatized
// with `pipeline` and duplicate lemmas summed before normalizing.
// Throws kFileNotFound, kParse (with line number) or kDictionaryTooSmall
// (fewer than 1000 entries).
FrequencyDictionary load_dictionary(const std::filesystem::path& path, const text::Pipeline& pipeline,
                                    double epsilon_floor = kDefaultEpsilonFloor,
                                    Composition composition = Composition::kIndependenceProduct);

// f_e lookup; same as dict.baseline(gram).
double baseline_freq(const NGram& gram, const FrequencyDictionary& dict);

// Lemma counts over every regular file under `corpus_dir`, visited in
// path order. Throws kFileNotFound if the directory does not exist and
// kEmptyCorpus if it yields no tokens.
std::map<std::string, std::uint64_t> count_corpus(const std::filesystem::path& corpus_dir,
                                                  const text::Pipeline& pipeline);

// Dictionary file text for `counts`, most frequent first, ties by lemma.
std::string format_dictionary(const std::map<std::string, std::uint64_t>& counts);

// count_corpus + format_dictionary, written atomically to `out_path`.
void build_dictionary(const std::filesystem::path& corpus_dir, const std::filesystem::path& out_path,
                      const text::Pipeline& pipeline);

}  // namespace simdiff
