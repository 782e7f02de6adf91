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

#include <fstream>
#include <sstream>

#include "simdiff/error.hpp"
#include "simdiff/text/lemmatizer.hpp"
#include "simdiff/text/porter.hpp"
#include "test_support.hpp"

namespace simdiff::text {
namespace {

TEST(Porter, Step1MatchesReferenceStemmer) {
  // Frozen output of a reference Porter implementation (steps 1a and 1b).
  std::ifstream in(simdiff::testing::test_data("porter_step1_oracle.tsv"));
  ASSERT_TRUE(in) << "missing oracle file";
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    ASSERT_NE(tab, std::string::npos) << line;
    const std::string word = line.substr(0, tab);
    const std::string expected = line.substr(tab + 1);
    EXPECT_EQ(porter::step1b(porter::step1a(word)).stem, expected) << word;
    ++rows;
  }
  EXPECT_GT(rows, 50);
}

TEST(Porter, Measure) {
  EXPECT_EQ(porter::measure("tr"), 0);
  EXPECT_EQ(porter::measure("tree"), 0);
  EXPECT_EQ(porter::measure("trouble"), 1);
  EXPECT_EQ(porter::measure("oats"), 1);
  EXPECT_EQ(porter::measure("troubles"), 2);
  EXPECT_EQ(porter::measure("private"), 2);
}

TEST(Lemmatizer, ReferenceExamples) {
  const Lemmatizer lem;
  EXPECT_EQ(lem.lemmatize("Prizes", PosTag::NOUN), "prize");
  EXPECT_EQ(lem.lemmatize("running", PosTag::VERB), "run");
  EXPECT_EQ(lem.lemmatize("the", PosTag::DET), "the");
}

TEST(Lemmatizer, InflectionsCollapse) {
  const Lemmatizer lem;
  EXPECT_EQ(lem.lemmatize("holes", PosTag::NOUN), "hole");
  EXPECT_EQ(lem.lemmatize("theories", PosTag::NOUN), "theory");
  EXPECT_EQ(lem.lemmatize("mechanics", PosTag::NOUN), "mechanic");
  EXPECT_EQ(lem.lemmatize("goals", PosTag::NOUN), "goal");
  EXPECT_EQ(lem.lemmatize("matches", PosTag::NOUN), "match");
  EXPECT_EQ(lem.lemmatize("scored", PosTag::VERB), "score");
  EXPECT_EQ(lem.lemmatize("married", PosTag::VERB), "marry");
  EXPECT_EQ(lem.lemmatize("died", PosTag::VERB), "die");
  EXPECT_EQ(lem.lemmatize("was", PosTag::VERB), "be");
  EXPECT_EQ(lem.lemmatize("children", PosTag::NOUN), "child");
}

TEST(Lemmatizer, UninflectedAndShortWordsKept) {
  const Lemmatizer lem;
  EXPECT_EQ(lem.lemmatize("physics", PosTag::NOUN), "physics");
  EXPECT_EQ(lem.lemmatize("gas", PosTag::NOUN), "gas");
  EXPECT_EQ(lem.lemmatize("analysis", PosTag::NOUN), "analysis");
  EXPECT_EQ(lem.lemmatize("famous", PosTag::ADJ), "famous");
}

TEST(Lemmatizer, ProperNounsOnlyLowercased) {
  const Lemmatizer lem;
  EXPECT_EQ(lem.lemmatize("Hawking", PosTag::PROPN), "hawking");
  EXPECT_EQ(lem.lemmatize("Wales", PosTag::PROPN), "wales");
}

TEST(Lemmatizer, Idempotent) {
  const Lemmatizer lem;
  for (std::string_view w : {"running", "Prizes", "studies", "carried", "houses", "leaves", "used", "focusing",
                             "created", "agreed", "buses", "boxes", "ponies", "ties", "hopping", "hoping"}) {
    for (PosTag tag : {PosTag::NOUN, PosTag::VERB, PosTag::ADJ}) {
      const std::string once = lem.lemmatize(w, tag);
      EXPECT_EQ(lem.lemmatize(once, tag), once) << w << " " << pos_tag_name(tag);
    }
  }
}

TEST(Lemmatizer, ExceptionsFile) {
  simdiff::testing::TempDir dir;
  simdiff::testing::write_text(dir / "ex.tsv", "# comment\nmice\tmouse\nGeese\tgoose\n");
  Lemmatizer lem;
  lem.load_exceptions(dir / "ex.tsv");
  EXPECT_EQ(lem.lemmatize("geese", PosTag::NOUN), "goose");

  simdiff::testing::write_text(dir / "bad.tsv", "ok\tfine\nbroken line\n");
  try {
    lem.load_exceptions(dir / "bad.tsv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
  try {
    lem.load_exceptions(dir / "absent.tsv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFileNotFound);
  }
}

}  // namespace
}  // namespace simdiff::text
