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

#include "mubar/wirtinger.hpp"

#include <string>

#include "mubar/error.hpp"
#include "mubar/linking.hpp"

namespace mubar {

namespace {

bool starts_arc(const LinkDiagram& d, EdgeId e) {
  const auto t = d.tail(e);
  return t && t->slot == 2;
}

void check_component(const WirtingerPresentation& p, int j) {
  if (j < 1 || j > p.component_count()) {
    throw ValidationError("component index " + std::to_string(j) +
                          " out of range");
  }
}

}  // namespace

WirtingerPresentation presentation(const LinkDiagram& d,
                                   std::span<const int> base_offset) {
  WirtingerPresentation p;
  const int n = d.component_count();
  p.edge_arc.assign(d.edge_count(), -1);
  p.base_arc.resize(n);
  p.walks.resize(n);
  std::vector<std::vector<int>> comp_arcs(n);

  for (int i = 1; i <= n; ++i) {
    const auto edges = d.component_edges(i);
    // Back up to the start of the arc holding the first edge.
    EdgeId start = edges.front();
    for (std::size_t k = 0; k < edges.size() && !starts_arc(d, start); ++k) {
      start = d.predecessor(start);
    }
    if (!starts_arc(d, start)) start = edges.front();  // no under-passes
    EdgeId e = start;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (k == 0 || starts_arc(d, e)) {
        comp_arcs[i - 1].push_back(static_cast<int>(p.arcs.size()));
        p.arcs.push_back({i, {}});
      }
      p.arcs.back().edges.push_back(e);
      p.edge_arc[e] = comp_arcs[i - 1].back();
      e = d.successor(e);
    }
  }

  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossing(c);
    p.relations.push_back({c, p.edge_arc[x.over_in()], p.edge_arc[x.under_in()],
                           p.edge_arc[x.under_out()], x.sign()});
  }

  for (int i = 1; i <= n; ++i) {
    const auto& arcs = comp_arcs[i - 1];
    const int m = static_cast<int>(arcs.size());
    int offset = base_offset.empty() ? 0 : base_offset[i - 1];
    offset = ((offset % m) + m) % m;
    p.base_arc[i - 1] = arcs[offset];
    for (int s = 0; s < m; ++s) {
      const Arc& arc = p.arcs[arcs[(offset + s) % m]];
      const auto h = d.head(arc.edges.back());
      if (!h || h->slot != 0) continue;
      const Crossing& x = d.crossing(h->crossing);
      p.walks[i - 1].push_back(
          {arcs[(offset + s) % m], p.edge_arc[x.over_in()], x.sign()});
    }
  }
  return p;
}

FreeWord raw_longitude(const LinkDiagram& d, const WirtingerPresentation& p,
                       int j) {
  (void)d;
  check_component(p, j);
  FreeWord w;
  for (const UnderStep& s : p.walks[j - 1]) w.push_back({s.over, s.sign});
  return w;
}

FreeWord preferred_longitude(const LinkDiagram& d,
                             const WirtingerPresentation& p, int j) {
  FreeWord w = raw_longitude(d, p, j);
  w *= FreeWord::generator(p.base_arc[j - 1]).power(-writhe_component(d, j));
  return w;
}

}  // namespace mubar
