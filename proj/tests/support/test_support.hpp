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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "simdiff/freq_dict.hpp"
#include "simdiff/ingest.hpp"
#include "simdiff/text/pipeline.hpp"

namespace simdiff::testing {

std::filesystem::path test_data(const std::string& name);
std::filesystem::path repo_data(const std::string& name);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

// Serves canned responses by exact URL; anything else is a 404.
class StubTransport : public Transport {
 public:
  void serve(const std::string& url, int status, std::string body);
  HttpResponse get(const std::string& url) override;

  int calls() const { return static_cast<int>(requested_.size()); }
  const std::vector<std::string>& requested() const { return requested_; }

 private:
  std::map<std::string, HttpResponse> responses_;
  std::vector<std::string> requested_;
};

// Fails the current test on any request.
class ForbiddenTransport : public Transport {
 public:
  HttpResponse get(const std::string& url) override;
};

// `n` distinct lowercase filler words that the lemmatizer leaves alone.
std::vector<std::string> filler_words(std::size_t n);

// Writes counts as a dictionary TSV. With `lemma_directive` the file is
// marked as already lemmatized.
void write_dictionary(const std::filesystem::path& path,
                      const std::map<std::string, std::uint64_t>& counts, bool lemma_directive);

// Dictionary with the given counts padded by 1000 filler words of count 1.
std::map<std::string, std::uint64_t> padded_counts(std::map<std::string, std::uint64_t> counts);

ProcessedDocument process_text(const std::string& text, const std::string& id = "doc");

}  // namespace simdiff::testing
