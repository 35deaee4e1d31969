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
#include <vector>

#include "mubar/diagram.hpp"
#include "mubar/free_word.hpp"

namespace mubar {

struct Arc {
  int component = 0;
  std::vector<EdgeId> edges;  // in traversal order
};

/// Relation at one crossing: out = over^-sign * in * over^sign.
struct WirtingerRelation {
  CrossingId crossing = -1;
  int over = 0;
  int in = 0;
  int out = 0;
  int sign = 1;
};

/// Passing under `over` with crossing sign `sign` at the end of `arc`.
struct UnderStep {
  int arc = 0;
  int over = 0;
  int sign = 1;
};

struct WirtingerPresentation {
  std::vector<Arc> arcs;                     // generator g is arcs[g]
  std::vector<WirtingerRelation> relations;  // one per crossing, same order
  std::vector<int> base_arc;                 // per component (index i - 1)
  std::vector<int> edge_arc;
  /// Per component: the under-steps met walking forward from the base arc.
  std::vector<std::vector<UnderStep>> walks;

  int component_count() const { return static_cast<int>(base_arc.size()); }
};

/// Arcs are numbered component by component, each starting with the arc that
/// holds the component's first edge. The base arc of component i is the
/// lowest-numbered one, or the one `base_offset[i-1]` steps further along
/// the component when offsets are given.
WirtingerPresentation presentation(const LinkDiagram& d,
                                   std::span<const int> base_offset = {});

/// Word in arc generators: over^sign for every under-pass of component j.
FreeWord raw_longitude(const LinkDiagram& d, const WirtingerPresentation& p,
                       int j);

/// raw_longitude times (base meridian)^-writhe.
FreeWord preferred_longitude(const LinkDiagram& d,
                             const WirtingerPresentation& p, int j);

}  // namespace mubar
