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

// Mutable scratch representation used while rewriting diagrams. Edges are
// never renumbered here; `finish` compacts ids and hands the result to the
// validating LinkDiagram constructor.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "mubar/diagram.hpp"

namespace mubar::detail {

struct RawDiagram {
  std::vector<Crossing> crossings;
  std::vector<bool> removed;  // per crossing
  std::vector<int> component;  // per edge; 0 marks a dead edge

  RawDiagram() = default;
  explicit RawDiagram(const LinkDiagram& d);

  EdgeId new_edge(int comp);
  CrossingId add_crossing(const Crossing& x);
  std::optional<EdgeEnd> tail(EdgeId e) const;
  std::optional<EdgeEnd> head(EdgeId e) const;
  void set_slot(EdgeEnd end, EdgeId e) { crossings[end.crossing].edges[end.slot] = e; }
  /// Replaces every slot reference to `from` by `to` and kills `from`.
  void merge_edge_into(EdgeId from, EdgeId to);
  /// Deletes crossings, joining the two halves of each strand through them.
  void remove_crossings(std::span<const CrossingId> ids);

  /// Builds the validated diagram. With `recompute_components`, components
  /// are re-derived from the strand cycles and ordered by the smallest old
  /// component label they contain.
  /// `renumbering`, when given, maps every raw edge id to its final id (-1 for
  /// dead edges).
  LinkDiagram finish(bool recompute_components = false,
                     std::vector<EdgeId>* renumbering = nullptr) const;
};

/// Crossing from edges listed counterclockwise around it and the positions
/// where the under- and over-strands enter.
Crossing make_crossing(const std::array<EdgeId, 4>& ccw, int under_in_pos,
                       int over_in_pos);

/// Splices a braid into the diagram across the arcs `strands`, listed left to
/// right along a transverse segment; each dart points "up" the braid. Letters
/// are signed generator indices (+i for sigma_i, -i for its inverse).
/// Sigma_i has the right strand passing over, so with both strands walking
/// up it is a positive crossing. No validity checks are made here. Returns
/// the edge pieces of each strand in walking order.
std::vector<std::vector<EdgeId>> insert_braid(RawDiagram& raw, std::span<const Dart> strands,
                  std::span<const int> word);

}  // namespace mubar::detail
