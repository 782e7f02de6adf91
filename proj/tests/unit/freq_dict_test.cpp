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

#include <gtest/gtest.h>

#include "simdiff/error.hpp"
#include "simdiff/freq_dict.hpp"
#include "test_support.hpp"

namespace simdiff {
namespace {

using simdiff::testing::padded_counts;
using simdiff::testing::TempDir;
using simdiff::testing::write_dictionary;
using simdiff::testing::write_text;

NGram g(std::initializer_list<const char*> lemmas) {
  NGram out;
  for (const char* l : lemmas) out.lemmas.emplace_back(l);
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(FrequencyDictionary, NormalizesCounts) {
  const auto counts = padded_counts({{"the", 50}, {"dog", 10}});
  std::uint64_t total = 0;
  for (const auto& [w, c] : counts) total += c;
  const auto dict = FrequencyDictionary::from_counts(counts);
  EXPECT_DOUBLE_EQ(dict.unigram("the"), 50.0 / static_cast<double>(total));
  EXPECT_DOUBLE_EQ(dict.unigram("dog"), 10.0 / static_cast<double>(total));
}

TEST(FrequencyDictionary, OutOfVocabularyGetsFloor) {
  const auto dict = FrequencyDictionary::from_counts(padded_counts({{"the", 50}}), 1e-9);
  EXPECT_EQ(dict.unigram("xqzt"), 1e-9);
  EXPECT_EQ(dict.baseline(g({"xqzt"})), 1e-9);
}

TEST(FrequencyDictionary, StoredUnigramLookup) {
  // 5 of 100 tokens.
  const auto dict = FrequencyDictionary::from_counts({{"the", 5}, {"other", 95}}, 1e-9);
  EXPECT_DOUBLE_EQ(dict.baseline(g({"the"})), 0.05);
}

TEST(FrequencyDictionary, IndependenceProductAndMin) {
  // black: 1e-4, hole: 2e-5 of 1e5 tokens.
  std::map<std::string, std::uint64_t> counts{{"black", 10}, {"hole", 2}, {"rest", 99988}};
  const auto product = FrequencyDictionary::from_counts(counts, 1e-9, Composition::kIndependenceProduct);
  EXPECT_NEAR(product.baseline(g({"black", "hole"})), 2e-9, 2e-9 * 1e-12);
  const auto minimum = FrequencyDictionary::from_counts(counts, 1e-9, Composition::kMinUnigram);
  EXPECT_NEAR(minimum.baseline(g({"black", "hole"})), 2e-5, 2e-5 * 1e-12);
}

TEST(FrequencyDictionary, RejectsBadFloor) {
  EXPECT_EQ(code_of([] { FrequencyDictionary::from_counts({{"a", 1}, {"b", 1}}, 0.0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { FrequencyDictionary::from_counts({{"a", 1}, {"b", 1}}, 0.6); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { FrequencyDictionary::from_counts({}); }), ErrorCode::kInvalidArgument);
}

TEST(LoadDictionary, MergesInflectedRows) {
  TempDir dir;
  auto counts = padded_counts({});
  std::string text = "run\t5\nrunning\t3\n";
  for (const auto& [w, c] : counts) text += w + "\t" + std::to_string(c) + "\n";
  write_text(dir / "dict.tsv", text);
  const text::Pipeline pipeline;
  const auto dict = load_dictionary(dir / "dict.tsv", pipeline);
  const double total = 8.0 + static_cast<double>(counts.size());
  EXPECT_DOUBLE_EQ(dict.unigram("run"), 8.0 / total);
  EXPECT_EQ(dict.unigram("running"), dict.epsilon_floor());
  EXPECT_TRUE(dict.source().lemmatized_on_load);
  EXPECT_EQ(dict.source().raw_entries, counts.size() + 2);
  EXPECT_EQ(dict.source().sha256.size(), 64u);
}

TEST(LoadDictionary, Errors) {
  TempDir dir;
  const text::Pipeline pipeline;
  EXPECT_EQ(code_of([&] { load_dictionary(dir / "absent.tsv", pipeline); }), ErrorCode::kFileNotFound);

  write_dictionary(dir / "small.tsv", {{"a", 1}, {"b", 2}}, false);
  EXPECT_EQ(code_of([&] { load_dictionary(dir / "small.tsv", pipeline); }), ErrorCode::kDictionaryTooSmall);

  write_text(dir / "bad.tsv", "the\t12\nbroken\tcount\n");
  try {
    load_dictionary(dir / "bad.tsv", pipeline);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("bad.tsv:2:"), std::string::npos) << e.what();
  }
}

TEST(LoadDictionary, ShippedDictionaryLoads) {
  const text::Pipeline pipeline;
  const auto dict = load_dictionary(simdiff::testing::repo_data("dict/en_wordfreq.tsv"), pipeline);
  EXPECT_GT(dict.size(), 20000u);
  EXPECT_GT(dict.unigram("the"), 100 * dict.unigram("relativity"));
  EXPECT_GT(dict.unigram("relativity"), dict.epsilon_floor());
}

TEST(CountCorpus, CountsLemmas) {
  TempDir dir;
  write_text(dir / "c/one.txt", "a a b");
  const text::Pipeline pipeline;
  const auto counts = count_corpus(dir / "c", pipeline);
  EXPECT_EQ(counts, (std::map<std::string, std::uint64_t>{{"a", 2}, {"b", 1}}));
}

TEST(CountCorpus, SumsPerFileCounts) {
  TempDir dir;
  write_text(dir / "c/1.txt", "Dogs bark at cats.");
  write_text(dir / "c/sub/2.txt", "Cats purr. Dogs sleep.");
  write_text(dir / "c/3.txt", "A dog barks.");
  const text::Pipeline pipeline;
  std::map<std::string, std::uint64_t> expected;
  for (const char* f : {"c/1.txt", "c/sub/2.txt", "c/3.txt"}) {
    TempDir single;
    write_text(single / "x.txt", simdiff::testing::read_text(dir / f));
    for (const auto& [lemma, n] : count_corpus(single.path(), pipeline)) expected[lemma] += n;
  }
  EXPECT_EQ(count_corpus(dir / "c", pipeline), expected);
  EXPECT_EQ(expected.at("dog"), 3u);
}

TEST(CountCorpus, EmptyDirectory) {
  TempDir dir;
  std::filesystem::create_directories(dir / "empty");
  const text::Pipeline pipeline;
  EXPECT_EQ(code_of([&] { count_corpus(dir / "empty", pipeline); }), ErrorCode::kEmptyCorpus);
}

TEST(BuildDictionary, RoundTripIsProportionalToCounts) {
  TempDir dir;
  std::string corpus;
  const auto words = simdiff::testing::filler_words(1200);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t k = 0; k <= i % 3; ++k) corpus += words[i] + " ";
  }
  write_text(dir / "corpus/a.txt", corpus);
  const text::Pipeline pipeline;
  build_dictionary(dir / "corpus", dir / "dict.tsv", pipeline);
  const auto dict = load_dictionary(dir / "dict.tsv", pipeline);
  EXPECT_FALSE(dict.source().lemmatized_on_load);
  EXPECT_EQ(dict.size(), words.size());
  EXPECT_DOUBLE_EQ(dict.unigram(words[2]) / dict.unigram(words[0]), 3.0);
  EXPECT_DOUBLE_EQ(dict.unigram(words[1]) / dict.unigram(words[0]), 2.0);
}

TEST(FormatDictionary, CountDescending) {
  EXPECT_EQ(format_dictionary({{"a", 1}, {"b", 3}, {"c", 3}}),
            "# simdiff frequency list: lemma<TAB>count\n" + std::string(kLemmaDirective) + "\nb\t3\nc\t3\na\t1\n");
}

}  // namespace
}  // namespace simdiff
