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

#include "simdiff/text/porter.hpp"

#include <algorithm>

namespace simdiff::text::porter {
namespace {

bool is_ascii_lower(std::string_view word) {
  return std::all_of(word.begin(), word.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

bool is_consonant(std::string_view w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 || !is_consonant(w, i - 1);
    default:
      return true;
  }
}

bool contains_vowel(std::string_view stem) {
  for (std::size_t i = 0; i < stem.size(); ++i) {
    if (!is_consonant(stem, i)) return true;
  }
  return false;
}

bool ends_double_consonant(std::string_view w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

}  // namespace

int measure(std::string_view stem) {
  int m = 0;
  std::size_t i = 0;
  const std::size_t n = stem.size();
  while (i < n && is_consonant(stem, i)) ++i;
  while (i < n) {
    while (i < n && !is_consonant(stem, i)) ++i;
    if (i >= n) break;
    while (i < n && is_consonant(stem, i)) ++i;
    ++m;
  }
  return m;
}

bool ends_cvc(std::string_view stem) {
  const std::size_t n = stem.size();
  if (n < 3) return false;
  if (!is_consonant(stem, n - 3) || is_consonant(stem, n - 2) || !is_consonant(stem, n - 1)) {
    return false;
  }
  const char last = stem[n - 1];
  return last != 'w' && last != 'x' && last != 'y';
}

std::string step1a(std::string_view word) {
  if (!is_ascii_lower(word)) return std::string(word);
  if (word.ends_with("sses")) return std::string(word.substr(0, word.size() - 2));
  if (word.ends_with("ies")) return std::string(word.substr(0, word.size() - 2));
  if (word.ends_with("ss")) return std::string(word);
  if (word.ends_with("s")) return std::string(word.substr(0, word.size() - 1));
  return std::string(word);
}

Step1bResult step1b(std::string_view word) {
  if (!is_ascii_lower(word)) return {std::string(word), false};
  if (word.ends_with("eed")) {
    const std::string_view stem = word.substr(0, word.size() - 3);
    if (measure(stem) > 0) return {std::string(word.substr(0, word.size() - 1)), false};
    return {std::string(word), false};
  }

  std::string_view stem;
  if (word.ends_with("ed") && contains_vowel(word.substr(0, word.size() - 2))) {
    stem = word.substr(0, word.size() - 2);
  } else if (word.ends_with("ing") && contains_vowel(word.substr(0, word.size() - 3))) {
    stem = word.substr(0, word.size() - 3);
  } else {
    return {std::string(word), false};
  }

  std::string out(stem);
  if (out.ends_with("at") || out.ends_with("bl") || out.ends_with("iz")) {
    out.push_back('e');
  } else if (ends_double_consonant(out) && out.back() != 'l' && out.back() != 's' &&
             out.back() != 'z') {
    out.pop_back();
  } else if (measure(out) == 1 && ends_cvc(out)) {
    out.push_back('e');
  }
  return {std::move(out), true};
}

}  // namespace simdiff::text::porter
