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

#include <filesystem>
#include <string>
#include <string_view>

#include "simdiff/text/types.hpp"

namespace simdiff {

struct SourceSpec {
  SourceKind kind = SourceKind::kFile;
  // File path, Gutenberg e-text number, or Wikipedia article title.
  std::string locator;
  std::filesystem::path cache_dir = "cache";
};

// Parses "[kind:]locator" where kind is file, gutenberg or wikipedia; a
// bare locator is a file path. Throws kInvalidArgument on an empty locator
// or a Gutenberg id that is not a positive integer.
SourceSpec parse_source(std::string_view text, const std::filesystem::path& cache_dir = "cache");

struct HttpResponse {
  int status = 0;
  std::string body;
};

// All network access goes through a Transport so tests can substitute a
// recorded or failing implementation.
class Transport {
 public:
  virtual ~Transport() = default;
  // Throws Error(kNetwork) if no response could be obtained.
  virtual HttpResponse get(const std::string& url) = 0;
};

// HTTP(S) GET over cpp-httplib, following redirects.
class HttpTransport : public Transport {
 public:
  HttpResponse get(const std::string& url) override;
};

inline constexpr std::string_view kDefaultWikipediaBaseUrl = "https://en.wikipedia.org";
inline constexpr std::string_view kDefaultGutenbergBaseUrl = "https://www.gutenberg.org";

struct FetchOptions {
  std::string wikipedia_base_url = std::string(kDefaultWikipediaBaseUrl);
  std::string gutenberg_base_url = std::string(kDefaultGutenbergBaseUrl);
  // Pass Gutenberg text through unchanged when the boilerplate markers are
  // missing instead of failing.
  bool allow_unmarked = false;

  // Defaults overridden by SIMDIFF_BASE_URL_WIKI / SIMDIFF_BASE_URL_GUTENBERG.
  static FetchOptions from_environment();
};

// Body text strictly between the "*** START OF" and "*** END OF" marker
// lines, with surrounding blank lines trimmed. Without markers, throws
// Error(kMarkerNotFound) unless allow_unmarked, which returns the input.
std::string strip_gutenberg(std::string_view raw, bool allow_unmarked = false);

// Plain-text Wikipedia extract cleanup: "== Heading ==" lines become
// standalone plain lines and bracketed reference marks ("[12]",
// "[citation needed]") are removed.
std::string clean_wikipedia_extract(std::string_view text);

std::string url_encode(std::string_view text);

// cache_dir/<kind>/<sanitized locator>.txt
std::filesystem::path cache_path(const SourceSpec& spec);

// Loads a document. Files are read directly without touching `transport`.
// Remote kinds are served from the cache when present; otherwise fetched,
// cleaned, and written to the cache atomically. The cached bytes are the
// returned text. Errors: kFileNotFound, kNotFound, kNetwork,
// kMarkerNotFound, kCacheWrite, kParse.
RawDocument fetch(const SourceSpec& spec, Transport& transport, const FetchOptions& options = {});

}  // namespace simdiff
