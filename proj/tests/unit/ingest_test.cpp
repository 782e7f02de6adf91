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

#include "simdiff/error.hpp"
#include "simdiff/ingest.hpp"
#include "test_support.hpp"

namespace simdiff {
namespace {

using simdiff::testing::read_text;
using simdiff::testing::StubTransport;
using simdiff::testing::TempDir;
using simdiff::testing::test_data;

constexpr const char* kGutenbergBody =
    "CHAPTER I.\n\nThe lamp was lit before the guests arrived.\nNobody spoke of the storm.\n";

const std::string kWikiUrl =
    "http://wiki.test/w/api.php?action=query&format=json&formatversion=2&prop=extracts&explaintext=1&redirects=1"
    "&titles=Small%20Fixture";

FetchOptions stub_options() {
  FetchOptions o;
  o.wikipedia_base_url = "http://wiki.test";
  o.gutenberg_base_url = "http://gutenberg.test/";
  return o;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(ParseSource, Kinds) {
  EXPECT_EQ(parse_source("gutenberg:84").kind, SourceKind::kGutenberg);
  EXPECT_EQ(parse_source("wikipedia:Albert Einstein").locator, "Albert Einstein");
  EXPECT_EQ(parse_source("wiki:Messi").kind, SourceKind::kWikipedia);
  EXPECT_EQ(parse_source("notes/a.txt").kind, SourceKind::kFile);
  EXPECT_EQ(parse_source("file:c:x").locator, "c:x");
  EXPECT_EQ(parse_source("a.txt", "/tmp/c").cache_dir, "/tmp/c");
  EXPECT_EQ(code_of([] { parse_source("gutenberg:0"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_source("gutenberg:12a"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_source("wikipedia:"); }), ErrorCode::kInvalidArgument);
}

TEST(StripGutenberg, KeepsOnlyBody) {
  const std::string raw = read_text(test_data("gutenberg_fixture.txt"));
  const std::string body = strip_gutenberg(raw);
  EXPECT_EQ(body, kGutenbergBody);
  EXPECT_EQ(body.find("LICENSE"), std::string::npos);
  EXPECT_EQ(body.find("eBook"), std::string::npos);
}

TEST(StripGutenberg, Idempotent) {
  const std::string once = strip_gutenberg(read_text(test_data("gutenberg_fixture.txt")));
  EXPECT_EQ(strip_gutenberg(once, /*allow_unmarked=*/true), once);
}

TEST(StripGutenberg, MissingMarkers) {
  EXPECT_EQ(code_of([] { strip_gutenberg("no markers here\n"); }), ErrorCode::kMarkerNotFound);
  EXPECT_EQ(code_of([] { strip_gutenberg("*** START OF X ***\nbody without end\n"); }), ErrorCode::kMarkerNotFound);
  EXPECT_EQ(strip_gutenberg("plain\n", true), "plain\n");
}

TEST(CleanWikipedia, HeadingsAndReferences) {
  EXPECT_EQ(clean_wikipedia_extract("Intro text.[1]\n== History ==\nBody[citation needed] here.\n"),
            "Intro text.\n\nHistory\n\nBody here.\n");
}

TEST(Fetch, GutenbergThroughStubAndCache) {
  TempDir dir;
  StubTransport transport;
  transport.serve("http://gutenberg.test/cache/epub/99/pg99.txt", 200, read_text(test_data("gutenberg_fixture.txt")));
  const SourceSpec spec = parse_source("gutenberg:99", dir.path());
  const RawDocument first = fetch(spec, transport, stub_options());
  EXPECT_EQ(first.text, kGutenbergBody);
  EXPECT_EQ(first.id, "gutenberg:99");
  EXPECT_EQ(transport.calls(), 1);
  EXPECT_EQ(read_text(cache_path(spec)), first.text);
  EXPECT_EQ(cache_path(spec), dir.path() / "gutenberg" / "99.txt");

  const RawDocument second = fetch(spec, transport, stub_options());
  EXPECT_EQ(transport.calls(), 1) << "second fetch must be served from cache";
  EXPECT_EQ(second.text, first.text);
}

TEST(Fetch, WikipediaExtractCleaned) {
  TempDir dir;
  StubTransport transport;
  transport.serve(kWikiUrl, 200, read_text(test_data("wikipedia_fixture.json")));
  const RawDocument doc = fetch(parse_source("wikipedia:Small Fixture", dir.path()), transport, stub_options());
  EXPECT_EQ(doc.text,
            "A small fixture is a test article. It has a reference.\n\nHistory\n\nIt was written for tests.\n\n"
            "Later\n\nNothing else happened.\n");
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "wikipedia" / "Small_Fixture.txt"));
}

TEST(Fetch, ErrorsAreDistinct) {
  TempDir dir;
  StubTransport transport;
  transport.serve("http://wiki.test/w/api.php?action=query&format=json&formatversion=2&prop=extracts&explaintext=1"
                  "&redirects=1&titles=No%20Such%20Article%20Xyz",
                  200, read_text(test_data("wikipedia_missing.json")));
  transport.serve("http://gutenberg.test/cache/epub/5/pg5.txt", 503, "busy");
  transport.serve("http://gutenberg.test/cache/epub/6/pg6.txt", 200, "no markers");
  const FetchOptions opts = stub_options();
  EXPECT_EQ(code_of([&] { fetch(parse_source("wikipedia:No Such Article Xyz", dir.path()), transport, opts); }),
            ErrorCode::kNotFound);
  EXPECT_EQ(code_of([&] { fetch(parse_source("gutenberg:4", dir.path()), transport, opts); }), ErrorCode::kNotFound);
  EXPECT_EQ(code_of([&] { fetch(parse_source("gutenberg:5", dir.path()), transport, opts); }), ErrorCode::kNetwork);
  EXPECT_EQ(code_of([&] { fetch(parse_source("gutenberg:6", dir.path()), transport, opts); }),
            ErrorCode::kMarkerNotFound);
  EXPECT_EQ(code_of([&] { fetch(parse_source(dir.path().string() + "/absent.txt"), transport, opts); }),
            ErrorCode::kFileNotFound);
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "gutenberg" / "5.txt"));

  // A cache directory that is a regular file cannot be written.
  simdiff::testing::write_text(dir / "blocked", "x");
  transport.serve("http://gutenberg.test/cache/epub/7/pg7.txt", 200, read_text(test_data("gutenberg_fixture.txt")));
  EXPECT_EQ(code_of([&] { fetch(parse_source("gutenberg:7", dir / "blocked"), transport, opts); }),
            ErrorCode::kCacheWrite);
}

TEST(Fetch, FileSourceNeedsNoNetwork) {
  TempDir dir;
  simdiff::testing::write_text(dir / "a.txt", "Some text.");
  simdiff::testing::ForbiddenTransport transport;
  const RawDocument doc = fetch(parse_source((dir / "a.txt").string()), transport);
  EXPECT_EQ(doc.text, "Some text.");
}

TEST(FetchOptions, EnvironmentOverrides) {
  setenv("SIMDIFF_BASE_URL_WIKI", "http://127.0.0.1:1", 1);
  const FetchOptions o = FetchOptions::from_environment();
  EXPECT_EQ(o.wikipedia_base_url, "http://127.0.0.1:1");
  EXPECT_EQ(o.gutenberg_base_url, kDefaultGutenbergBaseUrl);
  unsetenv("SIMDIFF_BASE_URL_WIKI");
}

}  // namespace
}  // namespace simdiff
