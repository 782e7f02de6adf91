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

#include <random>

#include "checks.hpp"
#include "ngram_oracle.hpp"
#include "simdiff/freq_dict.hpp"
#include "simdiff/ngram.hpp"
#include "simdiff/weighting.hpp"
#include "test_support.hpp"

namespace simdiff::testing {
namespace {

constexpr int kCases = 2000;

#define EXPECT_CHECK(expr)           \
  do {                               \
    const CheckResult r_ = (expr);   \
    EXPECT_TRUE(r_.ok) << r_.detail; \
  } while (0)

TEST(WeightProperties, ZeroAtBaseline) {
  std::mt19937_64 rng(1);
  EXPECT_CHECK(check_zero_at_baseline(rng, kCases));
}

TEST(WeightProperties, ThresholdZeroing) {
  std::mt19937_64 rng(2);
  EXPECT_CHECK(check_threshold_zeroing(rng, kCases));
}

TEST(WeightProperties, LogDecreasesWithBaseline) {
  std::mt19937_64 rng(3);
  EXPECT_CHECK(check_log_fe_monotone(rng, kCases));
}

TEST(WeightProperties, FinalFlagMonotone) {
  std::mt19937_64 rng(4);
  EXPECT_CHECK(check_final_flags(rng, kCases));
}

TEST(WeightProperties, NormalizationFactorKeepsRanking) {
  std::mt19937_64 rng(5);
  EXPECT_CHECK(check_nf_argmax_invariance(rng, kCases));
}

TEST(WeightProperties, Symmetry) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  for (int i = 0; i < kCases; ++i) {
    const double f1 = u(rng), f2 = u(rng), fe = u(rng) * 0.999;
    const bool e = rng() & 1, c = rng() & 1;
    ASSERT_EQ(weight_basic(f1, f2, fe), weight_basic(f2, f1, fe));
    ASSERT_EQ(weight_log(f1, f2, fe), weight_log(f2, f1, fe));
    ASSERT_EQ(weight_final(f1, f2, fe, e, c), weight_final(f2, f1, fe, e, c));
  }
}

TEST(WeightProperties, NonNegative) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(1e-9, 1.0);
  for (int i = 0; i < kCases; ++i) {
    const double f1 = u(rng), f2 = u(rng), fe = u(rng) * 0.999;
    for (SchemeKind k : {SchemeKind::kBasic, SchemeKind::kLog, SchemeKind::kThreshold, SchemeKind::kFinal}) {
      ASSERT_GE(apply_scheme(WeightScheme{k}, f1, f2, fe, rng() & 1, rng() & 1), 0.0);
    }
  }
}

TEST(BaselineProperties, PositiveAndBoundedByFactors) {
  std::mt19937_64 rng(8);
  std::map<std::string, std::uint64_t> counts;
  const auto words = filler_words(1500);
  for (const auto& w : words) counts[w] = 1 + rng() % 1000;
  for (Composition comp : {Composition::kIndependenceProduct, Composition::kMinUnigram}) {
    const auto dict = FrequencyDictionary::from_counts(counts, 1e-9, comp);
    for (int i = 0; i < kCases; ++i) {
      NGram gram;
      const int n = 1 + static_cast<int>(rng() % 3);
      double min_factor = 1.0;
      for (int k = 0; k < n; ++k) {
        // Some lemmas are out of vocabulary.
        gram.lemmas.push_back(rng() % 5 == 0 ? "oov" + std::to_string(rng() % 50) : words[rng() % words.size()]);
        min_factor = std::min(min_factor, std::max(dict.unigram(gram.lemmas.back()), dict.epsilon_floor()));
      }
      const double fe = dict.baseline(gram);
      ASSERT_GT(fe, 0.0);
      ASSERT_LE(fe, min_factor);
      ASSERT_LT(fe, 1.0);
    }
  }
}

TEST(NGramProperties, MatchesRecountOnRandomDocuments) {
  std::mt19937_64 rng(9);
  EXPECT_CHECK(check_ngram_oracle(rng, 200, 200));
}

TEST(NGramProperties, CommonIsCommutative) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < kCases / 4; ++i) {
    NGramTable a, b;
    a.n = b.n = 1;
    for (int k = 0; k < 20; ++k) {
      a.entries[NGram{{"w" + std::to_string(rng() % 30)}}].count = 1;
      b.entries[NGram{{"w" + std::to_string(rng() % 30)}}].count = 1;
    }
    ASSERT_EQ(common_ngrams(a, b), common_ngrams(b, a));
  }
}

TEST(NGramProperties, DeletingASentenceNeverIncreasesCounts) {
  std::mt19937_64 rng(11);
  for (int d = 0; d < 100; ++d) {
    const auto doc = process_text(random_document(rng, 200).text);
    const std::size_t k = rng() % doc.sentences.size();
    const auto smaller = remove_sentence(doc, k);
    for (int n = 1; n <= 3; ++n) {
      const auto before = extract_ngrams(doc, n);
      const auto after = extract_ngrams(smaller, n);
      for (const auto& [gram, stats] : after.entries) {
        ASSERT_TRUE(before.entries.contains(gram));
        ASSERT_LE(stats.count, before.entries.at(gram).count) << gram.joined();
      }
    }
  }
}

TEST(PipelineProperties, DeterministicAndIdempotentLemmas) {
  std::mt19937_64 rng(12);
  const text::Lemmatizer lem;
  for (int d = 0; d < 100; ++d) {
    const std::string text = random_document(rng, 200).text;
    const auto doc = process_text(text);
    ASSERT_EQ(doc, process_text(text));
    for (const Token& t : doc.tokens) ASSERT_EQ(lem.lemmatize(t.lemma, t.pos), t.lemma) << t.surface;
  }
}

}  // namespace
}  // namespace simdiff::testing
