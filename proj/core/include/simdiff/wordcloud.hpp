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
#include <string>
#include <vector>

#include "simdiff/report.hpp"
#include "simdiff/weighting.hpp"

namespace simdiff {

// Glyph metrics in em units. Rendered text is forced to the estimated
// advance width through SVG textLength, so the boxes below are exact.
inline constexpr double kGlyphAdvanceEm = 0.6;
inline constexpr double kAscentEm = 0.8;
inline constexpr double kDescentEm = 0.2;

struct WordCloudOptions {
  std::size_t top_k = 50;
  double width = 800;
  double height = 600;
  std::uint64_t seed = 42;
  double max_font_size = 64;
  double min_font_size = 8;
  // Clearance kept between boxes and from the canvas edge.
  double padding = 2;
};

struct Box {
  double x0 = 0;
  double y0 = 0;
  double x1 = 0;
  double y1 = 0;

  bool overlaps(const Box& other) const noexcept {
    return x0 < other.x1 && other.x0 < x1 && y0 < other.y1 && other.y0 < y1;
  }
};

struct PlacedTerm {
  std::string text;
  double weight = 0;
  double font_size = 0;
  // Horizontal center and baseline.
  double x = 0;
  double baseline = 0;
  double text_length = 0;
  Box box;
};

struct WordCloudLayout {
  std::vector<PlacedTerm> placed;
  std::size_t dropped = 0;
};

// Font size is max_font_size * sqrt(weight / max weight), floored at
// min_font_size. Terms are placed in rank order along an Archimedean spiral
// from the canvas center; a term that fits nowhere is dropped.
WordCloudLayout layout_wordcloud(const std::vector<WeightedNGram>& ranked,
                                 const WordCloudOptions& options);

// SVG 1.1 document for the order-n list of `report`. Identical inputs give
// identical bytes. Throws kMissingOrder, kEmptyReport, or kInvalidArgument
// for a zero top_k or non-positive canvas.
std::string render_wordcloud(const AnalysisReport& report, int n, const WordCloudOptions& options);

}  // namespace simdiff
