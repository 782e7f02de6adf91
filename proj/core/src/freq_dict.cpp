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

#include "simdiff/freq_dict.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "simdiff/error.hpp"
#include "simdiff/hash.hpp"
#include "simdiff/io.hpp"

namespace simdiff {

std::string_view composition_name(Composition composition) {
  return composition == Composition::kMinUnigram ? "min_unigram" : "independence_product";
}

Composition parse_composition(std::string_view name) {
  if (name == "product" || name == "independence_product") return Composition::kIndependenceProduct;
  if (name == "min" || name == "min_unigram") return Composition::kMinUnigram;
  throw Error(ErrorCode::kInvalidArgument, "unknown composition rule: " + std::string(name));
}

FrequencyDictionary FrequencyDictionary::from_counts(
    const std::map<std::string, std::uint64_t>& lemma_counts, double epsilon_floor,
    Composition composition) {
  long double total = 0;
  for (const auto& [lemma, count] : lemma_counts) total += static_cast<long double>(count);
  if (total <= 0) throw Error(ErrorCode::kInvalidArgument, "frequency counts are empty");

  FrequencyDictionary dict;
  dict.epsilon_floor_ = epsilon_floor;
  dict.composition_ = composition;
  double min_freq = std::numeric_limits<double>::infinity();
  for (const auto& [lemma, count] : lemma_counts) {
    if (count == 0) continue;
    const auto f = static_cast<double>(static_cast<long double>(count) / total);
    dict.freq_.emplace(lemma, f);
    min_freq = std::min(min_freq, f);
  }
  if (!(epsilon_floor > 0) || epsilon_floor > min_freq) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon floor must be in (0, smallest stored frequency]");
  }
  return dict;
}

double FrequencyDictionary::unigram(std::string_view lemma) const {
  const auto it = freq_.find(std::string(lemma));
  return it == freq_.end() ? epsilon_floor_ : std::max(it->second, epsilon_floor_);
}

double FrequencyDictionary::baseline(const NGram& gram) const {
  if (gram.lemmas.empty()) return epsilon_floor_;
  if (gram.lemmas.size() == 1) return unigram(gram.lemmas.front());
  double out = composition_ == Composition::kIndependenceProduct ? 1.0
                                                                 : std::numeric_limits<double>::infinity();
  for (const auto& lemma : gram.lemmas) {
    const double f = unigram(lemma);
    out = composition_ == Composition::kIndependenceProduct ? out * f : std::min(out, f);
  }
  // Keep the strict-positivity contract even if a long product underflows.
  return std::max(out, std::numeric_limits<double>::min());
}

double baseline_freq(const NGram& gram, const FrequencyDictionary& dict) {
  return dict.baseline(gram);
}

FrequencyDictionary load_dictionary(const std::filesystem::path& path, const text::Pipeline& pipeline,
                                    double epsilon_floor, Composition composition) {
  const std::string bytes = read_file(path);

  std::map<std::string, std::uint64_t> counts;
  bool lemmatized = false;
  std::size_t entries = 0;
  std::size_t line_no = 0;
  std::istringstream in(bytes);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line == kLemmaDirective) lemmatized = true;
      continue;
    }
    const auto tab = line.find('\t');
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::kParse, path.string() + ":" + std::to_string(line_no) + ": " + why);
    };
    if (tab == std::string::npos) throw fail("expected token<TAB>count");
    const std::string_view token(line.data(), tab);
    const std::string_view count_text(line.data() + tab + 1, line.size() - tab - 1);
    if (token.empty()) throw fail("empty token");
    std::uint64_t count = 0;
    const auto [ptr, ec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size()) {
      throw fail("count is not a non-negative integer");
    }
    ++entries;
    const std::string key = lemmatized ? std::string(token) : pipeline.lemmatize_word(token);
    counts[key] += count;
  }
  if (entries < kMinDictionaryEntries) {
    throw Error(ErrorCode::kDictionaryTooSmall,
                path.string() + " has " + std::to_string(entries) + " entries; at least " +
                    std::to_string(kMinDictionaryEntries) + " are required");
  }

  FrequencyDictionary dict = FrequencyDictionary::from_counts(counts, epsilon_floor, composition);
  dict.source_.path = path.string();
  dict.source_.sha256 = sha256_hex(bytes);
  dict.source_.raw_entries = entries;
  dict.source_.lemmatized_on_load = !lemmatized;
  return dict;
}

std::map<std::string, std::uint64_t> count_corpus(const std::filesystem::path& corpus_dir,
                                                  const text::Pipeline& pipeline) {
  std::error_code ec;
  if (!std::filesystem::is_directory(corpus_dir, ec)) {
    throw Error(ErrorCode::kFileNotFound, "corpus directory not found: " + corpus_dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(corpus_dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::map<std::string, std::uint64_t> counts;
  for (const auto& file : files) {
    RawDocument raw{file.string(), read_file(file), SourceKind::kFile};
    ProcessedDocument doc;
    try {
      doc = pipeline.process(raw);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kEmptyInput) continue;
      throw;
    }
    for (const Token& token : doc.tokens) {
      if (token.pos != PosTag::PUNCT) ++counts[token.lemma];
    }
  }
  if (counts.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no tokens found under " + corpus_dir.string());
  }
  return counts;
}

std::string format_dictionary(const std::map<std::string, std::uint64_t>& counts) {
  std::vector<std::pair<std::string, std::uint64_t>> rows(counts.begin(), counts.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::string out;
  out += "# simdiff frequency list: lemma<TAB>count\n";
  out += kLemmaDirective;
  out += '\n';
  for (const auto& [lemma, count] : rows) {
    out += lemma;
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

void build_dictionary(const std::filesystem::path& corpus_dir, const std::filesystem::path& out_path,
                      const text::Pipeline& pipeline) {
  write_file_atomic(out_path, format_dictionary(count_corpus(corpus_dir, pipeline)));
}

}  // namespace simdiff
