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

#include "simdiff/text/tokenizer.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "simdiff/error.hpp"
#include "simdiff/unicode.hpp"

namespace simdiff::text {
namespace {

constexpr std::array<std::string_view, 29> kAbbreviations = {
    "mr", "mrs", "ms", "dr", "st", "jr", "sr", "prof", "etc", "vs", "fig",
    "vol", "gen", "col", "lt", "sgt", "capt", "gov", "rev", "hon", "sen", "rep",
    "inc", "ltd", "co", "corp", "mt", "ft", "approx"};

constexpr std::array<std::string_view, 6> kClitics = {"s", "re", "ll", "ve", "d", "m"};

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }

bool is_sentence_final(std::string_view surface) {
  return surface == "." || surface == "!" || surface == "?";
}

bool is_closing(std::string_view surface) {
  return surface == "\"" || surface == "'" || surface == ")" || surface == "]" ||
         surface == "”" || surface == "’" || surface == "}";
}

struct Scanner {
  std::string_view text;
  std::vector<Token> tokens;

  char32_t peek(std::size_t pos) const {
    if (pos >= text.size()) return 0;
    return unicode::next_code_point(text, pos);
  }

  std::size_t after(std::size_t pos) const {
    unicode::next_code_point(text, pos);
    return pos;
  }

  void emit(std::size_t begin, std::size_t end) {
    Token token;
    token.surface = std::string(text.substr(begin, end - begin));
    token.span = {begin, end};
    tokens.push_back(std::move(token));
  }

  // Consumes a run of word characters, keeping decimal separators between
  // digits. Returns the end offset.
  std::size_t scan_word_chars(std::size_t pos) const {
    while (pos < text.size()) {
      const char32_t cp = peek(pos);
      if (unicode::is_word_char(cp)) {
        pos = after(pos);
        continue;
      }
      if ((cp == U'.' || cp == U',') && pos > 0 && unicode::is_digit(peek(pos - 1)) &&
          unicode::is_digit(peek(pos + 1))) {
        pos = after(pos);
        continue;
      }
      break;
    }
    return pos;
  }

  // Scans a word starting at `begin`, splitting English clitics
  // ("Einstein's" -> "Einstein" "'s", "don't" -> "do" "n't").
  std::size_t scan_word(std::size_t begin) {
    std::size_t end = scan_word_chars(begin);
    while (end < text.size() && is_apostrophe(peek(end))) {
      const std::size_t suffix_begin = after(end);
      if (suffix_begin >= text.size() || !unicode::is_letter(peek(suffix_begin))) break;
      const std::size_t suffix_end = scan_word_chars(suffix_begin);
      const std::string suffix =
          unicode::to_lower(text.substr(suffix_begin, suffix_end - suffix_begin));
      const std::string word = unicode::to_lower(text.substr(begin, end - begin));
      if (suffix == "t" && word.size() > 1 && word.back() == 'n') {
        emit(begin, end - 1);
        emit(end - 1, suffix_end);
        return suffix_end;
      }
      if (std::find(kClitics.begin(), kClitics.end(), suffix) != kClitics.end()) {
        emit(begin, end);
        emit(end, suffix_end);
        return suffix_end;
      }
      end = suffix_end;
    }
    emit(begin, end);
    return end;
  }
};

bool gap_has_blank_line(std::string_view gap) {
  int newlines = 0;
  for (char c : gap) {
    if (c == '\n') {
      if (++newlines >= 2) return true;
    }
  }
  return false;
}

}  // namespace

bool is_abbreviation(std::string_view word) {
  const std::string lower = unicode::to_lower(word);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) != kAbbreviations.end();
}

TokenizedText tokenize(std::string_view text) {
  Scanner scanner{text, {}};
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = scanner.peek(pos);
    if (unicode::is_whitespace(cp)) {
      pos = scanner.after(pos);
    } else if (unicode::is_word_char(cp)) {
      pos = scanner.scan_word(pos);
    } else {
      const std::size_t end = scanner.after(pos);
      scanner.emit(pos, end);
      pos = end;
    }
  }
  if (scanner.tokens.empty()) {
    throw Error(ErrorCode::kEmptyInput, "document text is empty or whitespace only");
  }

  TokenizedText out;
  out.tokens = std::move(scanner.tokens);
  auto& tokens = out.tokens;

  std::size_t sentence_begin = 0;
  auto close_sentence = [&](std::size_t end) {
    if (end > sentence_begin) {
      for (std::size_t i = sentence_begin; i < end; ++i) {
        tokens[i].sentence_index = out.sentences.size();
      }
      out.sentences.push_back({sentence_begin, end});
      sentence_begin = end;
    }
  };

  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    const std::string_view gap(text.data() + tokens[i].span.end,
                               tokens[i + 1].span.begin - tokens[i].span.end);
    if (gap_has_blank_line(gap)) {
      close_sentence(i + 1);
      continue;
    }
    if (!is_sentence_final(tokens[i].surface)) continue;

    // Absorb closing quotes and brackets glued to the terminator.
    std::size_t last = i;
    while (last + 1 < tokens.size() && tokens[last + 1].span.begin == tokens[last].span.end &&
           is_closing(tokens[last + 1].surface)) {
      ++last;
    }
    if (last + 1 >= tokens.size()) break;
    const Token& next = tokens[last + 1];
    if (next.span.begin == tokens[last].span.end) continue;  // no whitespace
    if (!unicode::starts_upper(next.surface)) continue;
    if (tokens[i].surface == "." && i > 0 &&
        tokens[i - 1].span.end == tokens[i].span.begin) {
      const std::string_view prev = tokens[i - 1].surface;
      if (is_abbreviation(prev)) continue;
      std::size_t p = 0;
      const char32_t first = unicode::next_code_point(prev, p);
      if (p == prev.size() && unicode::is_upper(first)) continue;  // initial, e.g. "J."
    }
    close_sentence(last + 1);
    i = last;
  }
  close_sentence(tokens.size());
  return out;
}

}  // namespace simdiff::text
