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

#include "simdiff/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <regex>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "simdiff/error.hpp"
#include "simdiff/io.hpp"

namespace simdiff {
namespace {

std::string trim_blank_lines(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  // Keep leading indentation of the first body line.
  while (begin > 0 && text[begin - 1] != '\n') --begin;
  return std::string(text.substr(begin, end - begin));
}

bool starts_with_marker(std::string_view line, std::string_view marker) {
  const auto first = line.find_first_not_of(" \t");
  if (first == std::string_view::npos) return false;
  line.remove_prefix(first);
  if (line.size() < marker.size()) return false;
  for (std::size_t i = 0; i < marker.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(line[i])) != marker[i]) return false;
  }
  return true;
}

bool is_positive_integer(std::string_view text) {
  if (text.empty() || text.front() == '0') return false;
  return std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string env_or(const char* name, std::string_view fallback) {
  const char* value = std::getenv(name);
  return (value != nullptr && *value != '\0') ? std::string(value) : std::string(fallback);
}

std::string strip_trailing_slash(std::string url) {
  while (!url.empty() && url.back() == '/') url.pop_back();
  return url;
}

std::string fetch_gutenberg(const SourceSpec& spec, Transport& transport, const FetchOptions& options) {
  const std::string url = strip_trailing_slash(options.gutenberg_base_url) + "/cache/epub/" +
                          spec.locator + "/pg" + spec.locator + ".txt";
  const HttpResponse response = transport.get(url);
  if (response.status == 404) throw Error(ErrorCode::kNotFound, "no Gutenberg e-text " + spec.locator);
  if (response.status != 200) {
    throw Error(ErrorCode::kNetwork, "GET " + url + " returned HTTP " + std::to_string(response.status));
  }
  return strip_gutenberg(response.body, options.allow_unmarked);
}

std::string fetch_wikipedia(const SourceSpec& spec, Transport& transport, const FetchOptions& options) {
  const std::string url = strip_trailing_slash(options.wikipedia_base_url) +
                          "/w/api.php?action=query&format=json&formatversion=2&prop=extracts"
                          "&explaintext=1&redirects=1&titles=" +
                          url_encode(spec.locator);
  const HttpResponse response = transport.get(url);
  if (response.status == 404) throw Error(ErrorCode::kNotFound, "no Wikipedia article " + spec.locator);
  if (response.status != 200) {
    throw Error(ErrorCode::kNetwork, "GET " + url + " returned HTTP " + std::to_string(response.status));
  }
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(response.body);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("unreadable Wikipedia response: ") + e.what());
  }
  const auto& pages = root.value(nlohmann::json::json_pointer("/query/pages"), nlohmann::json::array());
  if (!pages.is_array() || pages.empty()) {
    throw Error(ErrorCode::kNotFound, "no Wikipedia article " + spec.locator);
  }
  const auto& page = pages.front();
  if (page.value("missing", false) || page.value("invalid", false) || !page.contains("extract")) {
    throw Error(ErrorCode::kNotFound, "no Wikipedia article " + spec.locator);
  }
  const std::string text = clean_wikipedia_extract(page.at("extract").get<std::string>());
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw Error(ErrorCode::kNotFound, "Wikipedia article " + spec.locator + " has no text");
  }
  return text;
}

}  // namespace

SourceSpec parse_source(std::string_view text, const std::filesystem::path& cache_dir) {
  SourceSpec spec;
  spec.cache_dir = cache_dir;
  std::string_view locator = text;
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view kind = text.substr(0, colon);
    if (kind == "file") {
      spec.kind = SourceKind::kFile;
      locator = text.substr(colon + 1);
    } else if (kind == "gutenberg") {
      spec.kind = SourceKind::kGutenberg;
      locator = text.substr(colon + 1);
    } else if (kind == "wikipedia" || kind == "wiki") {
      spec.kind = SourceKind::kWikipedia;
      locator = text.substr(colon + 1);
    }
  }
  if (locator.empty()) throw Error(ErrorCode::kInvalidArgument, "empty source locator");
  if (spec.kind == SourceKind::kGutenberg && !is_positive_integer(locator)) {
    throw Error(ErrorCode::kInvalidArgument,
                "Gutenberg id must be a positive integer: " + std::string(locator));
  }
  spec.locator = std::string(locator);
  return spec;
}

FetchOptions FetchOptions::from_environment() {
  FetchOptions options;
  options.wikipedia_base_url = env_or("SIMDIFF_BASE_URL_WIKI", kDefaultWikipediaBaseUrl);
  options.gutenberg_base_url = env_or("SIMDIFF_BASE_URL_GUTENBERG", kDefaultGutenbergBaseUrl);
  return options;
}

std::string strip_gutenberg(std::string_view raw, bool allow_unmarked) {
  std::size_t body_begin = std::string_view::npos;
  std::size_t body_end = std::string_view::npos;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    std::size_t eol = raw.find('\n', pos);
    const std::size_t next = eol == std::string_view::npos ? raw.size() : eol + 1;
    const std::string_view line = raw.substr(pos, next - pos);
    if (body_begin == std::string_view::npos) {
      if (starts_with_marker(line, "*** START OF")) body_begin = next;
    } else if (starts_with_marker(line, "*** END OF")) {
      body_end = pos;
      break;
    }
    pos = next;
  }
  if (body_begin == std::string_view::npos || body_end == std::string_view::npos) {
    if (allow_unmarked) return std::string(raw);
    throw Error(ErrorCode::kMarkerNotFound, "Project Gutenberg START/END markers not found");
  }
  std::string body = trim_blank_lines(raw.substr(body_begin, body_end - body_begin));
  std::erase(body, '\r');
  return body + "\n";
}

std::string clean_wikipedia_extract(std::string_view text) {
  static const std::regex kHeading(R"(^\s*(=+)\s*(.*?)\s*\1\s*$)");
  static const std::regex kReference(R"(\[(?:\d+|[a-z]|citation needed|clarification needed|note \d+|when\?|who\?|according to whom\?)\])",
                                     std::regex::icase);
  std::istringstream in{std::string(text)};
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch match;
    if (std::regex_match(line, match, kHeading)) {
      while (out.ends_with('\n')) out.pop_back();
      if (!out.empty()) out += "\n\n";
      out += match[2].str();
      out += "\n\n";
      continue;
    }
    out += std::regex_replace(line, kReference, "");
    out += '\n';
  }
  return trim_blank_lines(out) + "\n";
}

std::string url_encode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else if (c == ' ') {
      out += "%20";
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xf]);
    }
  }
  return out;
}

std::filesystem::path cache_path(const SourceSpec& spec) {
  std::string name;
  for (char c : spec.locator) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_';
    name.push_back(keep ? c : '_');
  }
  if (name.empty() || name.front() == '.') name.insert(name.begin(), '_');
  return spec.cache_dir / std::string(source_kind_name(spec.kind)) / (name + ".txt");
}

RawDocument fetch(const SourceSpec& spec, Transport& transport, const FetchOptions& options) {
  RawDocument doc;
  doc.source = spec.kind;
  if (spec.kind == SourceKind::kFile) {
    doc.id = spec.locator;
    doc.text = read_file(spec.locator);
    return doc;
  }
  doc.id = std::string(source_kind_name(spec.kind)) + ":" + spec.locator;

  const std::filesystem::path cached = cache_path(spec);
  std::error_code ec;
  if (std::filesystem::is_regular_file(cached, ec)) {
    doc.text = read_file(cached);
    return doc;
  }

  doc.text = spec.kind == SourceKind::kGutenberg ? fetch_gutenberg(spec, transport, options)
                                                 : fetch_wikipedia(spec, transport, options);
  try {
    write_file_atomic(cached, doc.text);
  } catch (const Error& e) {
    throw Error(ErrorCode::kCacheWrite, e.what());
  }
  return doc;
}

}  // namespace simdiff
