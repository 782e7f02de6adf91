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

#include "simdiff/io.hpp"
#include "simdiff/text/pipeline.hpp"
#include "simdiff/unicode.hpp"
#include "test_support.hpp"

namespace simdiff::text {
namespace {

using simdiff::testing::process_text;

void expect_well_formed(const ProcessedDocument& doc) {
  auto within_one_sentence = [&](const TokenRange& r) {
    int holders = 0;
    for (const TokenRange& s : doc.sentences) holders += s.contains(r) ? 1 : 0;
    return holders == 1;
  };
  for (const auto* ranges : {&doc.noun_chunks, &doc.entities}) {
    std::size_t prev_end = 0;
    for (const TokenRange& r : *ranges) {
      EXPECT_FALSE(r.empty());
      EXPECT_LE(prev_end, r.begin) << "overlapping spans";
      EXPECT_TRUE(within_one_sentence(r));
      prev_end = r.end;
    }
  }
  for (const Token& tok : doc.tokens) {
    if (tok.pos == PosTag::PUNCT) continue;
    EXPECT_FALSE(tok.lemma.empty()) << tok.surface;
    EXPECT_EQ(unicode::to_lower(tok.lemma), tok.lemma) << tok.surface;
  }
}

TEST(Pipeline, ProcessesSimpleText) {
  const auto doc = process_text("Dogs bark. Cats purr.");
  ASSERT_EQ(doc.tokens.size(), 6u);
  EXPECT_EQ(doc.tokens[0].lemma, "dog");
  EXPECT_EQ(doc.tokens[3].lemma, "cat");
  EXPECT_EQ(doc.sentences.size(), 2u);
}

TEST(Pipeline, NfcNormalizesBeforeTokenizing) {
  const auto decomposed = process_text("Zu\xcc\x88rich");
  const auto composed = process_text("Z\xc3\xbcrich");
  EXPECT_EQ(decomposed.text, composed.text);
  EXPECT_EQ(decomposed.tokens, composed.tokens);
}

TEST(Pipeline, ChunksAndEntities) {
  const auto doc = process_text("He won the Nobel Prize for the general theory.");
  EXPECT_EQ(doc.entities, (std::vector<TokenRange>{{3, 5}}));
  EXPECT_EQ(doc.noun_chunks, (std::vector<TokenRange>{{2, 5}, {6, 9}}));
  expect_well_formed(doc);
}

TEST(Pipeline, DeterministicOnSnapshot) {
  const std::string text = read_file(simdiff::testing::repo_data("snapshots/wikipedia/Albert_Einstein.txt"));
  const auto a = process_text(text);
  const auto b = process_text(text);
  EXPECT_EQ(a, b);
  expect_well_formed(a);
}

TEST(Pipeline, LemmasIdempotentOnSnapshots) {
  const Lemmatizer lem;
  for (const char* name : {"Albert_Einstein.txt", "Stephen_Hawking.txt", "Lionel_Messi.txt", "Cristiano_Ronaldo.txt"}) {
    const auto doc = process_text(read_file(simdiff::testing::repo_data(std::string("snapshots/wikipedia/") + name)));
    for (const Token& tok : doc.tokens) {
      EXPECT_EQ(lem.lemmatize(tok.lemma, tok.pos), tok.lemma) << name << ": " << tok.surface;
    }
  }
}

TEST(Pipeline, SpansStayInsideSentencesOnRandomText) {
  std::mt19937 rng(11);
  const std::vector<std::string> vocab = {"the", "The", "black", "hole", "Einstein", "Nobel", "Prize", "won", "a",
                                          "general", "theory", ".", ",", "!", "?", "Mr.", "\n\n", "of", "Ulm"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = "Start";
    const std::size_t len = 1 + rng() % 60;
    for (std::size_t i = 0; i < len; ++i) text += " " + vocab[rng() % vocab.size()];
    expect_well_formed(process_text(text));
  }
}

}  // namespace
}  // namespace simdiff::text
