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

#include "simdiff/wordcloud.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "simdiff/error.hpp"
#include "simdiff/unicode.hpp"

namespace simdiff {
namespace {

constexpr const char* kPalette[] = {"#1f4e79", "#2e7d32", "#8e24aa", "#c62828",
                                    "#ef6c00", "#00838f", "#5d4037", "#455a64"};

std::size_t code_points(std::string_view text) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    unicode::next_code_point(text, pos);
    ++n;
  }
  return n;
}

std::string fixed(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

Box box_at(double cx, double baseline, double length, double font) {
  return {cx - length / 2, baseline - kAscentEm * font, cx + length / 2, baseline + kDescentEm * font};
}

// Uniform in [0, 1) from the raw engine output, independent of the
// standard library's distribution implementations.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

WordCloudLayout layout_wordcloud(const std::vector<WeightedNGram>& ranked,
                                 const WordCloudOptions& options) {
  WordCloudLayout layout;
  const std::size_t count = std::min(options.top_k, ranked.size());
  if (count == 0) return layout;

  double max_weight = 0;
  for (std::size_t i = 0; i < count; ++i) max_weight = std::max(max_weight, ranked[i].weight);

  const double cx = options.width / 2;
  const double cy = options.height / 2;
  const double aspect = options.height / options.width;
  const double max_radius = std::hypot(options.width, options.height) / 2;
  const double pad = options.padding;
  constexpr double kStep = 0.05;        // radians per probe
  constexpr double kPitch = 2.0;        // px of radius per radian

  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < count; ++i) {
    const WeightedNGram& gram = ranked[i];
    PlacedTerm term;
    term.text = gram.gram.joined();
    term.weight = gram.weight;
    term.font_size = max_weight > 0
                         ? std::max(options.min_font_size,
                                    options.max_font_size * std::sqrt(gram.weight / max_weight))
                         : options.max_font_size;
    term.text_length = kGlyphAdvanceEm * term.font_size * static_cast<double>(code_points(term.text));
    const double start_angle = 2 * std::numbers::pi * unit_interval(rng);
    // Center the box vertically on the probe point.
    const double baseline_offset = (kAscentEm - kDescentEm) * term.font_size / 2;

    bool placed = false;
    for (double t = 0;; t += kStep) {
      const double r = kPitch * t;
      if (r > max_radius) break;
      const double px = cx + r * std::cos(start_angle + t);
      const double py = cy + r * aspect * std::sin(start_angle + t);
      const double baseline = py + baseline_offset;
      const Box box = box_at(px, baseline, term.text_length, term.font_size);
      if (box.x0 < pad || box.y0 < pad || box.x1 > options.width - pad ||
          box.y1 > options.height - pad) {
        continue;
      }
      const Box padded{box.x0 - pad, box.y0 - pad, box.x1 + pad, box.y1 + pad};
      const bool collides = std::any_of(layout.placed.begin(), layout.placed.end(),
                                        [&](const PlacedTerm& other) { return padded.overlaps(other.box); });
      if (collides) continue;
      term.x = px;
      term.baseline = baseline;
      term.box = box;
      placed = true;
      break;
    }
    if (placed) {
      layout.placed.push_back(std::move(term));
    } else {
      ++layout.dropped;
    }
  }
  return layout;
}

std::string render_wordcloud(const AnalysisReport& report, int n, const WordCloudOptions& options) {
  if (options.top_k == 0) throw Error(ErrorCode::kInvalidArgument, "top_k must be at least 1");
  if (!(options.width > 0) || !(options.height > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "canvas dimensions must be positive");
  }
  const auto it = report.per_n.find(n);
  if (it == report.per_n.end()) {
    throw Error(ErrorCode::kMissingOrder, "report has no " + std::to_string(n) + "-gram list");
  }
  if (it->second.empty()) {
    throw Error(ErrorCode::kEmptyReport, "no " + std::to_string(n) + "-grams to place");
  }

  const WordCloudLayout layout = layout_wordcloud(it->second, options);
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(options.width) +
         "\" height=\"" + fixed(options.height) + "\" viewBox=\"0 0 " + fixed(options.width) + " " +
         fixed(options.height) + "\">\n";
  svg += "<!-- order=" + std::to_string(n) + " candidates=" +
         std::to_string(std::min(options.top_k, it->second.size())) +
         " placed=" + std::to_string(layout.placed.size()) +
         " dropped=" + std::to_string(layout.dropped) + " seed=" + std::to_string(options.seed) +
         " -->\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  svg += "<g font-family=\"monospace\" text-anchor=\"middle\">\n";
  for (std::size_t i = 0; i < layout.placed.size(); ++i) {
    const PlacedTerm& term = layout.placed[i];
    svg += "<text x=\"" + fixed(term.x) + "\" y=\"" + fixed(term.baseline) + "\" font-size=\"" +
           fixed(term.font_size) + "\" textLength=\"" + fixed(term.text_length) +
           "\" lengthAdjust=\"spacingAndGlyphs\" fill=\"" +
           kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))] + "\">" + xml_escape(term.text) +
           "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace simdiff
