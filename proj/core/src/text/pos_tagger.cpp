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

#include "simdiff/text/pos_tagger.hpp"

#include <optional>
#include <unordered_map>

#include "simdiff/unicode.hpp"

namespace simdiff::text {
namespace {

struct Entry {
  std::string_view word;
  PosTag tag;
};

constexpr std::string_view kDeterminers[] = {
    "the", "a", "an", "this", "that", "these", "those", "every", "each", "some",
    "any", "no", "another", "either", "neither", "all", "both", "such", "whichever"};

constexpr std::string_view kAdpositions[] = {
    "of", "in", "on", "at", "by", "for", "with", "from", "to", "into", "onto",
    "about", "above", "across", "after", "against", "along", "among", "amongst",
    "around", "as", "before", "behind", "below", "beneath", "beside", "between",
    "beyond", "despite", "down", "during", "except", "inside", "near", "off",
    "out", "outside", "over", "past", "since", "through", "throughout", "toward",
    "towards", "under", "underneath", "until", "till", "up", "upon", "via",
    "within", "without", "per", "like", "amid", "unlike", "alongside"};

constexpr std::string_view kPronouns[] = {
    "i", "me", "my", "mine", "myself", "you", "your", "yours", "yourself",
    "yourselves", "he", "him", "his", "himself", "she", "her", "hers", "herself",
    "it", "its", "itself", "we", "us", "our", "ours", "ourselves", "they", "them",
    "their", "theirs", "themselves", "who", "whom", "whose", "which", "what",
    "whoever", "whatever", "someone", "somebody", "something", "anyone",
    "anybody", "anything", "everyone", "everybody", "everything", "nobody",
    "nothing", "none"};

constexpr std::string_view kVerbs[] = {
    "is", "am", "are", "was", "were", "be", "been", "being", "has", "have", "had",
    "having", "do", "does", "did", "done", "will", "would", "shall", "should",
    "can", "could", "may", "might", "must", "'m", "'re", "'ve", "'ll", "'d", "ca",
    "wo", "get", "gets", "got", "said", "says", "say", "made", "make", "took",
    "take", "taken", "gave", "give", "given", "came", "come", "knew", "know",
    "known", "saw", "see", "seen", "thought", "found", "became", "become",
    "began", "begun", "won", "lost", "went", "go", "goes", "gone", "wrote",
    "written", "led", "held", "met", "ran", "spent", "built", "taught",
    "brought", "bought", "fought", "sought", "caught", "told", "sold", "stood",
    "understood", "kept", "felt", "meant", "paid", "sent", "struck", "threw",
    "thrown", "drew", "drawn", "grew", "grown", "flew", "drove", "driven",
    "rose", "spoke", "spoken", "broke", "broken", "chose", "chosen", "fell",
    "fallen", "shook", "showed", "shown", "forgot", "hid", "heard", "laid",
    "withdrew", "underwent", "arose", "sang", "wore", "beat", "sat", "let",
    "put", "set", "became", "remain", "seem", "seems", "seemed", "want",
    "wanted", "need", "needs", "use", "uses"};

constexpr std::string_view kNumbers[] = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen", "twenty", "thirty", "forty",
    "fifty", "sixty", "seventy", "eighty", "ninety", "hundred", "thousand",
    "million", "billion", "trillion", "dozen", "hundreds", "thousands",
    "millions", "billions", "dozens"};

// Conjunctions, particles and adverbs share the OTHER bucket.
constexpr std::string_view kOther[] = {
    "and", "or", "but", "nor", "so", "yet", "if", "then", "than", "because",
    "although", "though", "while", "whilst", "whereas", "whether", "unless",
    "not", "n't", "also", "very", "too", "only", "just", "even", "still",
    "already", "always", "never", "often", "sometimes", "however", "thus",
    "therefore", "there", "here", "where", "when", "why", "how", "again", "ever",
    "soon", "now", "later", "once", "twice", "almost", "quite", "rather",
    "instead", "perhaps", "indeed", "yes", "'s", "'", "etc", "else", "hence",
    "moreover", "furthermore", "meanwhile", "nevertheless", "otherwise",
    "together", "away", "back", "ago", "afterwards", "eventually", "mostly",
    "well", "far", "least", "less", "around", "whom", "wherever", "whenever"};

constexpr std::string_view kAdjectives[] = {
    "black", "white", "red", "green", "blue", "yellow", "brown", "grey", "gray",
    "dark", "bright", "general", "new", "old", "young", "good", "great", "big",
    "small", "large", "long", "short", "high", "low", "early", "late", "major",
    "minor", "first", "second", "third", "fourth", "fifth", "last", "next",
    "many", "much", "more", "most", "few", "other", "same", "different",
    "important", "own", "public", "private", "special", "social", "national",
    "international", "political", "scientific", "better", "worse", "worst",
    "full", "free", "real", "true", "false", "whole", "main", "key", "human",
    "modern", "hot", "cold", "strong", "weak", "poor", "rich", "simple",
    "complex", "possible", "impossible", "able", "unable", "likely", "unlikely",
    "certain", "several", "similar", "single", "double", "top", "senior",
    "junior", "recent", "current", "former", "particular", "fine", "wide",
    "deep", "close", "open", "clear", "common", "famous", "popular", "rare",
    "difficult", "easy", "hard", "heavy", "light", "quick", "slow", "fast",
    "happy", "sad", "serious", "successful", "unsuccessful", "average", "distinct", "elite", "prolific",
    "honorary", "notable", "prominent", "renowned", "active", "widespread",
    "extensive", "intense", "rapid", "severe", "subsequent", "various",
    "numerous", "additional", "eventual", "further", "entire", "prestigious",
    "consecutive", "overall", "ultimate", "legendary", "academic", "athletic",
    "domestic", "electric", "magnetic", "atomic", "cosmic", "economic",
    "historic", "olympic", "specific", "dynamic", "photoelectric",
    "gravitational", "thermal", "nuclear", "molecular", "stellar", "solar",
    "busy", "ill", "aware", "due"};

// Open-class nouns whose spelling would otherwise trip a suffix rule.
constexpr std::string_view kNouns[] = {
    "hospital", "festival", "journal", "capital", "animal", "signal", "material",
    "rival", "arrival", "proposal", "approval", "trial", "principal", "official",
    "criminal", "individual", "potential", "original", "chemical", "final",
    "total", "medal", "scandal", "metal", "crystal", "portal", "interval", "canal",
    "ritual", "manual", "terminal", "survival", "denial", "removal", "renewal",
    "revival", "withdrawal", "tribunal", "cathedral", "mammal", "pedal", "petal",
    "royal", "general", "admiral", "arsenal", "carnival", "appeal", "ideal",
    "family", "assembly", "supply", "reply", "rally", "anomaly", "monopoly",
    "belly", "jelly", "bully", "folly", "holly", "italy", "sicily", "building",
    "meeting", "wedding", "beginning", "feeling", "ceiling", "evening", "morning",
    "painting", "training", "funding", "hearing", "reading", "writing", "thing",
    "string", "spring", "offspring", "recording", "setting", "opening", "ending",
    "warning", "finding", "teaching", "understanding", "upbringing", "speed",
    "creed", "breed", "greed", "steed", "hundred", "kindred", "sacred", "naked",
    "wicked", "rugged", "beloved", "learned"};

const std::unordered_map<std::string_view, PosTag>& lexicon() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string_view, PosTag>();
    // Earlier insertions win; order encodes priority.
    for (auto w : kDeterminers) t->emplace(w, PosTag::DET);
    for (auto w : kPronouns) t->emplace(w, PosTag::PRON);
    for (auto w : kAdpositions) t->emplace(w, PosTag::ADP);
    for (auto w : kVerbs) t->emplace(w, PosTag::VERB);
    for (auto w : kNumbers) t->emplace(w, PosTag::NUM);
    for (auto w : kOther) t->emplace(w, PosTag::OTHER);
    return t;
  }();
  return *table;
}

const std::unordered_map<std::string_view, PosTag>& open_lexicon() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string_view, PosTag>();
    for (auto w : kAdjectives) t->emplace(w, PosTag::ADJ);
    for (auto w : kNouns) t->emplace(w, PosTag::NOUN);
    return t;
  }();
  return *table;
}

bool has_word_char(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (unicode::is_word_char(unicode::next_code_point(s, pos))) return true;
  }
  return false;
}

bool is_numeric(std::string_view s) {
  bool digit = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = unicode::next_code_point(s, pos);
    if (unicode::is_digit(cp)) {
      digit = true;
    } else if (cp != U'.' && cp != U',') {
      return false;
    }
  }
  return digit;
}

// Ordinals and decades ("1st", "1990s") count as numbers too.
bool is_numberlike(std::string_view lower) {
  if (is_numeric(lower)) return true;
  for (std::string_view suffix : {"st", "nd", "rd", "th", "s"}) {
    if (lower.size() > suffix.size() && lower.ends_with(suffix) &&
        is_numeric(lower.substr(0, lower.size() - suffix.size()))) {
      return true;
    }
  }
  return false;
}

std::optional<PosTag> closed_class(std::string_view lower) {
  const auto& table = lexicon();
  if (auto it = table.find(lower); it != table.end()) return it->second;
  return std::nullopt;
}

}  // namespace

CaseEvidence::CaseEvidence(std::span<const Token> tokens, std::span<const TokenRange> sentences) {
  for (const TokenRange& range : sentences) {
    const auto sentence = tokens.subspan(range.begin, range.size());
    const std::size_t first = first_word_index(sentence);
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const std::string& surface = sentence[i].surface;
      const std::string lower = unicode::to_lower(surface);
      if (lower == surface) {
        if (has_word_char(surface)) lowercase_.insert(lower);
      } else if (i != first && unicode::starts_upper(surface)) {
        capitalized_inside_.insert(lower);
      }
    }
  }
}

std::size_t first_word_index(std::span<const Token> sentence) {
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    if (has_word_char(sentence[i].surface)) return i;
  }
  return sentence.size();
}

PosTag tag_word(std::string_view lower) {
  if (!has_word_char(lower)) return PosTag::PUNCT;
  if (auto tag = closed_class(lower)) return *tag;
  if (is_numberlike(lower)) return PosTag::NUM;
  const auto& open = open_lexicon();
  if (auto it = open.find(lower); it != open.end()) return it->second;
  if (lower.size() > 4) {
    if (lower.ends_with("ly")) return PosTag::OTHER;
    if (lower.ends_with("ing") || lower.ends_with("ed")) return PosTag::VERB;
    if (lower.ends_with("ous") || lower.ends_with("ful") || lower.ends_with("al")) {
      return PosTag::ADJ;
    }
  }
  return PosTag::NOUN;
}

std::vector<PosTag> pos_tag(std::span<const Token> sentence, const CaseEvidence& evidence) {
  std::vector<PosTag> tags(sentence.size(), PosTag::NOUN);
  const std::size_t first = first_word_index(sentence);
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    const std::string& surface = sentence[i].surface;
    if (!has_word_char(surface)) {
      tags[i] = PosTag::PUNCT;
      continue;
    }
    const std::string lower = unicode::to_lower(surface);
    if (auto tag = closed_class(lower)) {
      tags[i] = *tag;
      continue;
    }
    if (unicode::starts_upper(surface) && !is_numberlike(lower)) {
      const bool inside = i != first;
      if (inside || (evidence.seen_capitalized_inside(lower) && !evidence.seen_lowercase(lower))) {
        tags[i] = PosTag::PROPN;
        continue;
      }
    }
    tags[i] = tag_word(lower);
  }
  return tags;
}

}  // namespace simdiff::text
