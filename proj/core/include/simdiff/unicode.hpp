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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

// Thin UTF-8 helpers over ICU. All offsets are byte offsets.
namespace simdiff::unicode {

// Decodes the code point starting at text[pos] and advances pos past it.
// Ill-formed sequences decode to U+FFFD and advance by at least one byte.
char32_t next_code_point(std::string_view text, std::size_t& pos);

std::string nfc(std::string_view text);

// Simple (one-to-one) lowercase mapping per code point.
std::string to_lower(std::string_view text);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_mark(char32_t cp);
bool is_upper(char32_t cp);
bool is_whitespace(char32_t cp);

// Letters, digits and combining marks.
bool is_word_char(char32_t cp);

// True if the first code point of `word` is an uppercase or titlecase letter.
bool starts_upper(std::string_view word);

// True if `word` contains at least one letter and no lowercase letters.
bool is_all_caps(std::string_view word);

}  // namespace simdiff::unicode
