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

#include <string>
#include <string_view>

// Inflectional steps (1a and 1b) of the Porter stemmer over lowercase ASCII
// words. Words containing anything other than a-z are returned unchanged.
namespace simdiff::text::porter {

// Plural removal: sses -> ss, ies -> i, ss -> ss, s -> "".
std::string step1a(std::string_view word);

struct Step1bResult {
  std::string stem;
  // True when -ed or -ing was removed (the eed -> ee rule does not count).
  bool stripped = false;
};

// -eed/-ed/-ing removal with the at/bl/iz, undoubling and cvc+e fix-ups.
Step1bResult step1b(std::string_view word);

// Number of VC sequences in the [C](VC)^m[V] decomposition.
int measure(std::string_view stem);

// True if the stem ends consonant-vowel-consonant with the final consonant
// not w, x or y.
bool ends_cvc(std::string_view stem);

}  // namespace simdiff::text::porter
