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

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "mubar/diagram.hpp"

namespace mubar {

/// A braid word as signed generator indices: `i` is sigma_i, `-i` its inverse.
using BraidWord = std::vector<int>;

/// Reads whitespace- or comma-separated signed integers, e.g. "1 1 -2".
BraidWord parse_braid_word(std::string_view text);

/// Closure of a braid on `strands` strands. Sigma_i is a positive crossing
/// with strand i+1 passing over strand i. Components are ordered by the
/// lowest strand position they pass through.
LinkDiagram braid_closure(std::span<const int> word, int strands);

/// `braid_closure(parse_braid_word(text), strands)`.
LinkDiagram parse_braid(std::string_view text, int strands);

}  // namespace mubar
