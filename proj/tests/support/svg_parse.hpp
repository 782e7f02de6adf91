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

#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "simdiff/wordcloud.hpp"

namespace simdiff::testing {

struct SvgTerm {
  std::string text;
  double x = 0;
  double y = 0;
  double font_size = 0;
  double text_length = 0;

  // Same glyph metrics the renderer declares.
  Box box() const {
    return Box{x - text_length / 2, y - kAscentEm * font_size, x + text_length / 2, y + kDescentEm * font_size};
  }
};

struct ParsedSvg {
  double width = 0;
  double height = 0;
  std::vector<SvgTerm> terms;
};

// Throws boost::property_tree::xml_parser_error if the document is not
// well-formed XML.
inline ParsedSvg parse_svg(const std::string& svg) {
  namespace pt = boost::property_tree;
  std::istringstream in(svg);
  pt::ptree tree;
  pt::read_xml(in, tree);
  const pt::ptree& root = tree.get_child("svg");
  ParsedSvg out;
  out.width = root.get<double>("<xmlattr>.width");
  out.height = root.get<double>("<xmlattr>.height");
  for (const auto& [name, group] : root) {
    if (name != "g") continue;
    for (const auto& [tag, node] : group) {
      if (tag != "text") continue;
      SvgTerm term;
      term.text = node.get_value<std::string>();
      term.x = node.get<double>("<xmlattr>.x");
      term.y = node.get<double>("<xmlattr>.y");
      term.font_size = node.get<double>("<xmlattr>.font-size");
      term.text_length = node.get<double>("<xmlattr>.textLength");
      out.terms.push_back(term);
    }
  }
  return out;
}

}  // namespace simdiff::testing
