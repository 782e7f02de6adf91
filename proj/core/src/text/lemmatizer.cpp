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

#include "simdiff/text/lemmatizer.hpp"

#include <fstream>
#include <utility>

#include "simdiff/error.hpp"
#include "simdiff/text/porter.hpp"
#include "simdiff/unicode.hpp"

namespace simdiff::text {
namespace {

using Pair = std::pair<std::string_view, std::string_view>;

// Forms that map to a lemma regardless of tag.
constexpr Pair kGeneral[] = {
    {"is", "be"}, {"are", "be"}, {"was", "be"}, {"were", "be"}, {"am", "be"},
    {"been", "be"}, {"being", "be"}, {"'m", "be"}, {"'re", "be"},
    {"has", "have"}, {"had", "have"}, {"having", "have"}, {"'ve", "have"},
    {"does", "do"}, {"did", "do"}, {"done", "do"}, {"doing", "do"},
    {"n't", "not"}, {"ca", "can"}, {"wo", "will"}, {"'ll", "will"},
    {"better", "good"}, {"best", "good"}, {"worse", "bad"}, {"worst", "bad"},
    {"men", "man"}, {"women", "woman"}, {"children", "child"}, {"feet", "foot"},
    {"teeth", "tooth"}, {"mice", "mouse"}, {"geese", "goose"}, {"wolves", "wolf"},
    {"knives", "knife"}, {"wives", "wife"}, {"halves", "half"}, {"thieves", "thief"},
    {"lives", "life"}, {"selves", "self"}, {"shelves", "shelf"},
    {"criteria", "criterion"}, {"phenomena", "phenomenon"}, {"analyses", "analysis"},
    {"theses", "thesis"}, {"crises", "crisis"}, {"hypotheses", "hypothesis"},
    {"indices", "index"}, {"matrices", "matrix"}, {"vertices", "vertex"},
    {"appendices", "appendix"}, {"nuclei", "nucleus"}, {"radii", "radius"},
    {"focused", "focus"}, {"focusing", "focus"},
    {"treated", "treat"}, {"treating", "treat"}, {"defeated", "defeat"},
    {"defeating", "defeat"}, {"repeated", "repeat"}, {"repeating", "repeat"},
    {"heated", "heat"}, {"seated", "seat"}, {"cheated", "cheat"},
    {"retreated", "retreat"}, {"floated", "float"}, {"floating", "float"},
    {"coated", "coat"}, {"created", "create"}, {"creating", "create"},
    {"used", "use"}, {"using", "use"}, {"honored", "honor"}, {"honoured", "honour"},
    {"colored", "color"}, {"favored", "favor"}, {"labored", "labor"},
    {"monitored", "monitor"}, {"mentored", "mentor"}, {"sponsored", "sponsor"},
    {"authored", "author"}, {"anchored", "anchor"}, {"censored", "censor"},
    {"doctored", "doctor"}, {"united", "unite"}, {"invited", "invite"},
    {"cited", "cite"}, {"devoted", "devote"}, {"promoted", "promote"},
    {"voted", "vote"}, {"quoted", "quote"},
};

// Past tense and participle forms that are only read as verbs.
constexpr Pair kVerbOnly[] = {
    {"said", "say"}, {"says", "say"}, {"made", "make"}, {"took", "take"},
    {"taken", "take"}, {"got", "get"}, {"gotten", "get"}, {"gave", "give"},
    {"given", "give"}, {"came", "come"}, {"knew", "know"}, {"known", "know"},
    {"saw", "see"}, {"seen", "see"}, {"thought", "think"}, {"found", "find"},
    {"became", "become"}, {"began", "begin"}, {"begun", "begin"}, {"won", "win"},
    {"lost", "lose"}, {"left", "leave"}, {"went", "go"}, {"gone", "go"},
    {"goes", "go"}, {"wrote", "write"}, {"written", "write"}, {"led", "lead"},
    {"held", "hold"}, {"met", "meet"}, {"ran", "run"}, {"spent", "spend"},
    {"built", "build"}, {"taught", "teach"}, {"brought", "bring"},
    {"bought", "buy"}, {"fought", "fight"}, {"sought", "seek"}, {"caught", "catch"},
    {"told", "tell"}, {"sold", "sell"}, {"stood", "stand"},
    {"understood", "understand"}, {"kept", "keep"}, {"slept", "sleep"},
    {"felt", "feel"}, {"meant", "mean"}, {"paid", "pay"}, {"sent", "send"},
    {"shot", "shoot"}, {"struck", "strike"}, {"threw", "throw"}, {"thrown", "throw"},
    {"drew", "draw"}, {"drawn", "draw"}, {"grew", "grow"}, {"grown", "grow"},
    {"flew", "fly"}, {"flown", "fly"}, {"drove", "drive"}, {"driven", "drive"},
    {"rode", "ride"}, {"ridden", "ride"}, {"rose", "rise"}, {"risen", "rise"},
    {"arose", "arise"}, {"arisen", "arise"}, {"spoke", "speak"}, {"spoken", "speak"},
    {"broke", "break"}, {"broken", "break"}, {"chose", "choose"}, {"chosen", "choose"},
    {"fell", "fall"}, {"fallen", "fall"}, {"forgot", "forget"},
    {"forgotten", "forget"}, {"froze", "freeze"}, {"frozen", "freeze"},
    {"hid", "hide"}, {"hidden", "hide"}, {"lay", "lie"}, {"lain", "lie"},
    {"laid", "lay"}, {"lent", "lend"}, {"lit", "light"}, {"rang", "ring"},
    {"sang", "sing"}, {"sung", "sing"}, {"sank", "sink"}, {"shook", "shake"},
    {"shaken", "shake"}, {"shone", "shine"}, {"shown", "show"}, {"stole", "steal"},
    {"stolen", "steal"}, {"swam", "swim"}, {"swore", "swear"}, {"sworn", "swear"},
    {"tore", "tear"}, {"torn", "tear"}, {"wore", "wear"}, {"worn", "wear"},
    {"woke", "wake"}, {"woken", "wake"}, {"withdrew", "withdraw"},
    {"withdrawn", "withdraw"}, {"undertook", "undertake"},
    {"undertaken", "undertake"}, {"overtook", "overtake"}, {"beat", "beat"},
    {"beaten", "beat"}, {"bit", "bite"}, {"bitten", "bite"}, {"bled", "bleed"},
    {"blew", "blow"}, {"blown", "blow"}, {"bred", "breed"}, {"dealt", "deal"},
    {"dug", "dig"}, {"fed", "feed"}, {"fled", "flee"}, {"forgave", "forgive"},
    {"forgiven", "forgive"}, {"heard", "hear"}, {"hung", "hang"}, {"spun", "spin"},
    {"stuck", "stick"}, {"swept", "sweep"}, {"wound", "wind"}, {"read", "read"},
    {"ate", "eat"}, {"eaten", "eat"}, {"sat", "sit"}, {"overcame", "overcome"}, {"foresaw", "foresee"},
    {"mistook", "mistake"}, {"mistaken", "mistake"}, {"oversaw", "oversee"},
    {"overseen", "oversee"}, {"upheld", "uphold"}, {"withheld", "withhold"},
    {"underwent", "undergo"}, {"undergone", "undergo"}, {"outran", "outrun"},
    {"reran", "rerun"}, {"rebuilt", "rebuild"}, {"rewrote", "rewrite"},
    {"rewritten", "rewrite"}, {"retook", "retake"}, {"dove", "dive"},
    {"strove", "strive"}, {"striven", "strive"}, {"wove", "weave"},
    {"woven", "weave"}, {"slid", "slide"}, {"clung", "cling"}, {"flung", "fling"},
    {"stung", "sting"}, {"swung", "swing"}, {"strung", "string"},
};

// Words ending in -s that are not plural or third-person forms.
constexpr std::string_view kUninflected[] = {
    "physics", "mathematics", "politics", "economics", "statistics", "athletics",
    "ethics", "linguistics", "genetics", "electronics", "aeronautics",
    "thermodynamics", "electrodynamics", "acoustics", "optics", "logistics",
    "gymnastics", "aerobics", "robotics", "semantics", "phonetics", "metaphysics",
    "astrophysics", "geophysics", "biophysics", "cosmos", "chaos", "ethos", "kudos",
    "pathos", "thermos", "news", "series", "species", "means", "always", "perhaps",
    "towards", "afterwards", "besides", "sometimes", "nevertheless", "whereas",
    "thus", "plus", "minus", "unless", "chess", "lens", "gas", "bias", "atlas",
    "canvas", "alias", "christmas", "diabetes", "herpes", "measles", "mumps",
    "billiards", "headquarters", "whereabouts", "crossroads", "outskirts",
    "rabies", "scissors", "trousers", "pants", "glasses", "clothes", "thanks",
    "overseas", "nowadays", "indoors", "outdoors",
    "upstairs", "downstairs", "ourselves", "themselves", "yourselves", "ours",
    "yours", "theirs", "hers", "its", "his", "this",
};

bool is_ascii_alpha(std::string_view w) {
  for (char c : w) {
    if (c < 'a' || c > 'z') return false;
  }
  return !w.empty();
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool ends_consonant_then(std::string_view stem, std::string_view tail) {
  if (!stem.ends_with(tail) || stem.size() < tail.size() + 1) return false;
  return !is_vowel(stem[stem.size() - tail.size() - 1]);
}

// Noun plural and verb third-person -s removal.
std::string strip_plural(const std::string& w) {
  if (w.ends_with("ss") || w.ends_with("us") || w.ends_with("is") || w.ends_with("ous")) {
    return w;
  }
  if (w.ends_with("ies")) {
    return w.size() > 4 ? w.substr(0, w.size() - 3) + "y" : w.substr(0, w.size() - 1);
  }
  for (std::string_view sibilant : {"xes", "ches", "shes", "sses", "zzes"}) {
    if (w.ends_with(sibilant)) return w.substr(0, w.size() - 2);
  }
  return porter::step1a(w);
}

// Porter step 1b leaves many multi-syllable stems without their final e
// ("receiv", "includ"). Restore it for endings where English stems almost
// always carry one.
std::string restore_e(std::string stem) {
  if (stem.empty() || stem.back() == 'e') return stem;
  const std::size_t n = stem.size();
  const char last = stem[n - 1];
  if (last == 'v') return stem + "e";
  if (last == 'c' && n >= 2 && (is_vowel(stem[n - 2]) || stem[n - 2] == 'n' || stem[n - 2] == 'r')) {
    return stem + "e";
  }
  if (stem.ends_with("dg") || stem.ends_with("rg") || stem.ends_with("ang") ||
      stem.ends_with("eng")) {
    return stem + "e";
  }
  if ((last == 's' || last == 'z') && n >= 3 && is_vowel(stem[n - 2]) && is_vowel(stem[n - 3])) {
    return stem + "e";
  }
  for (std::string_view tail : {"ur", "ut", "id", "ud", "ir", "in", "um", "ag", "is", "os", "us"}) {
    if (ends_consonant_then(stem, tail)) return stem + "e";
  }
  return stem;
}

std::string strip_verb_suffix(const std::string& w) {
  const porter::Step1bResult result = porter::step1b(w);
  if (!result.stripped) return result.stem;
  const std::size_t suffix = w.ends_with("ing") ? 3 : 2;
  const std::string raw = w.substr(0, w.size() - suffix);
  const bool undoubled = raw.size() >= 2 && raw[raw.size() - 1] == raw[raw.size() - 2] &&
                         result.stem.size() < raw.size();
  if (undoubled || result.stem.size() > raw.size()) return result.stem;
  // carried -> carry, died -> die
  if (suffix == 2 && result.stem.ends_with('i')) {
    std::string stem = result.stem;
    if (stem.size() <= 2) return stem + "e";
    if (!is_vowel(stem[stem.size() - 2])) stem.back() = 'y';
    return stem;
  }
  return restore_e(result.stem);
}

void read_pairs(const Pair* begin, const Pair* end,
                std::unordered_map<std::string, std::string>& into) {
  for (const Pair* p = begin; p != end; ++p) {
    into.emplace(std::string(p->first), std::string(p->second));
  }
}

}  // namespace

Lemmatizer::Lemmatizer() {
  read_pairs(std::begin(kGeneral), std::end(kGeneral), general_);
  read_pairs(std::begin(kVerbOnly), std::end(kVerbOnly), verb_only_);
  for (std::string_view word : kUninflected) {
    general_.emplace(std::string(word), std::string(word));
  }
  // Irregular targets are fixpoints even when their spelling would match a
  // suffix rule ("lose" is not "los" + e).
  for (auto* table : {&general_, &verb_only_}) {
    for (const auto& [surface, lemma] : *table) {
      general_.emplace(lemma, lemma);
    }
  }
}

void Lemmatizer::add_exception(std::string_view surface, std::string_view lemma) {
  const std::string s = unicode::to_lower(surface);
  const std::string l = unicode::to_lower(lemma);
  if (s.empty() || l.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty lemma exception entry");
  }
  verb_only_.erase(s);
  general_[s] = l;
  general_.emplace(l, l);
}

void Lemmatizer::load_exceptions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "lemma exception file not found: " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(line_no) +
                                         ": expected surface<TAB>lemma");
    }
    add_exception(line.substr(0, tab), line.substr(tab + 1));
  }
}

std::string Lemmatizer::resolve(const std::string& lemma) const {
  const auto it = general_.find(lemma);
  return it == general_.end() ? lemma : it->second;
}

std::string Lemmatizer::lemmatize_once(const std::string& lower, PosTag pos) const {
  if (auto it = general_.find(lower); it != general_.end()) return it->second;
  if (pos == PosTag::VERB) {
    if (auto it = verb_only_.find(lower); it != verb_only_.end()) return resolve(it->second);
  }
  if (pos != PosTag::NOUN && pos != PosTag::VERB) return lower;
  if (lower.size() <= 3 || !is_ascii_alpha(lower)) return lower;

  std::string out = strip_plural(lower);
  if (pos == PosTag::VERB && out.size() > 3) out = strip_verb_suffix(out);
  return resolve(out);
}

std::string Lemmatizer::lemmatize(std::string_view surface, PosTag pos) const {
  std::string current = unicode::to_lower(surface);
  if (pos == PosTag::PUNCT || pos == PosTag::PROPN || current.empty()) return current;
  // Every rewrite shortens the word or lands on a lexicon fixpoint, so this
  // converges within |word| steps.
  for (std::size_t guard = current.size() + 1; guard > 0; --guard) {
    std::string next = lemmatize_once(current, pos);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace simdiff::text
