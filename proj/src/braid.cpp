// Copyright 2026 The mubar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mubar/braid.hpp"

#include <cctype>
#include <string>

#include "mubar/error.hpp"
#include "raw_diagram.hpp"

namespace mubar {

BraidWord parse_braid_word(std::string_view text) {
  BraidWord word;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '-' || c == '+') ++i;
    const std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits || i - digits > 6) {
      throw ParseError("expected a signed generator index", start);
    }
    const int g = std::stoi(std::string(text.substr(digits, i - digits)));
    if (g == 0) throw ParseError("generator index 0 is not allowed", start);
    word.push_back(c == '-' ? -g : g);
  }
  return word;
}

LinkDiagram braid_closure(std::span<const int> word, int strands) {
  if (strands <= 0) {
    throw ValidationError("a braid needs at least one strand");
  }
  for (int letter : word) {
    const int g = letter < 0 ? -letter : letter;
    if (g < 1 || g >= strands) {
      throw ValidationError("generator " + std::to_string(letter) +
                            " is out of range for " + std::to_string(strands) +
                            " strands");
    }
  }
  detail::RawDiagram raw;
  std::vector<Dart> darts;
  for (int s = 1; s <= strands; ++s) {
    darts.push_back(Dart{raw.new_edge(s), true});
  }
  detail::insert_braid(raw, darts, word);
  return raw.finish(/*recompute_components=*/true);
}

LinkDiagram parse_braid(std::string_view text, int strands) {
  return braid_closure(parse_braid_word(text), strands);
}

}  // namespace mubar
