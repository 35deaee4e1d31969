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

#include <array>
#include <optional>
#include <vector>

namespace mubar {

using EdgeId = int;
using CrossingId = int;

/// A crossing of a link diagram. The four incident edges are listed
/// counterclockwise starting from the incoming under-edge, so `edges[0]` and
/// `edges[2]` are the under-strand and `edges[1]`, `edges[3]` the over-strand.
///
/// The sign is +1 when the under-strand direction turned a counterclockwise
/// quarter turn gives the over-strand direction, which happens exactly when
/// the over-strand enters at slot 1.
struct Crossing {
  std::array<EdgeId, 4> edges{};
  int over_in_slot = 1;

  int sign() const noexcept { return over_in_slot == 1 ? 1 : -1; }
  int over_out_slot() const noexcept { return over_in_slot ^ 2; }
  EdgeId under_in() const noexcept { return edges[0]; }
  EdgeId under_out() const noexcept { return edges[2]; }
  EdgeId over_in() const noexcept { return edges[over_in_slot]; }
  EdgeId over_out() const noexcept { return edges[over_out_slot()]; }
  bool is_head_slot(int slot) const noexcept {
    return slot == 0 || slot == over_in_slot;
  }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// One end of an edge: the crossing it attaches to and the slot it occupies.
struct EdgeEnd {
  CrossingId crossing = -1;
  int slot = -1;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

/// An edge walked in (`forward`) or against its orientation.
struct Dart {
  EdgeId edge = -1;
  bool forward = true;
  Dart reversed() const noexcept { return {edge, !forward}; }
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// An oriented link diagram stored as planar-diagram data.
///
/// Edges run between consecutive crossings along a component; a component
/// without crossings is a single edge that appears in no crossing. Components
/// are numbered 1..n. Construction validates the data and renumbers edges so
/// that each component's edges are consecutive in traversal order, starting
/// from the edge that had the smallest id in that component. Crossing order is
/// kept as given.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  /// `edge_component[e]` is the 1-based component of edge `e`. Throws
  /// ValidationError when the incidence or orientation data is inconsistent.
  /// When `renumbering` is given it receives the new id of every input edge.
  LinkDiagram(std::vector<Crossing> crossings, std::vector<int> edge_component,
              std::vector<EdgeId>* renumbering = nullptr);

  int component_count() const noexcept { return component_count_; }
  int edge_count() const noexcept { return static_cast<int>(component_.size()); }
  int crossing_count() const noexcept {
    return static_cast<int>(crossings_.size());
  }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(CrossingId c) const;

  int component_of(EdgeId e) const;
  EdgeId successor(EdgeId e) const;
  EdgeId predecessor(EdgeId e) const;
  std::optional<EdgeEnd> tail(EdgeId e) const;
  std::optional<EdgeEnd> head(EdgeId e) const;
  bool is_free_loop(EdgeId e) const;

  /// Edges of a component in traversal order.
  std::vector<EdgeId> component_edges(int component) const;

  int under_component(CrossingId c) const;
  int over_component(CrossingId c) const;
  bool is_self_crossing(CrossingId c) const;

  const std::vector<int>& edge_components() const noexcept { return component_; }

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  void check_edge(EdgeId e) const;
  void check_component(int component) const;

  std::vector<Crossing> crossings_;
  std::vector<int> component_;
  std::vector<std::optional<EdgeEnd>> tail_;
  std::vector<std::optional<EdgeEnd>> head_;
  std::vector<int> first_edge_;  // per component, plus sentinel
  int component_count_ = 0;
};

/// True when the diagrams agree up to relabeling edges (component indices,
/// orientations and the multiset of crossings must match).
bool isomorphic(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace mubar
