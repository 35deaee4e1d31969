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

#include "raw_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mubar::detail {

RawDiagram::RawDiagram(const LinkDiagram& d)
    : crossings(d.crossings()),
      removed(d.crossings().size(), false),
      component(d.edge_components()) {}

EdgeId RawDiagram::new_edge(int comp) {
  component.push_back(comp);
  return static_cast<EdgeId>(component.size()) - 1;
}

CrossingId RawDiagram::add_crossing(const Crossing& x) {
  crossings.push_back(x);
  removed.push_back(false);
  return static_cast<CrossingId>(crossings.size()) - 1;
}

std::optional<EdgeEnd> RawDiagram::tail(EdgeId e) const {
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    if (removed[c]) continue;
    for (int s = 0; s < 4; ++s) {
      if (crossings[c].edges[s] == e && !crossings[c].is_head_slot(s)) {
        return EdgeEnd{c, s};
      }
    }
  }
  return std::nullopt;
}

std::optional<EdgeEnd> RawDiagram::head(EdgeId e) const {
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    if (removed[c]) continue;
    for (int s = 0; s < 4; ++s) {
      if (crossings[c].edges[s] == e && crossings[c].is_head_slot(s)) {
        return EdgeEnd{c, s};
      }
    }
  }
  return std::nullopt;
}

void RawDiagram::merge_edge_into(EdgeId from, EdgeId to) {
  if (from == to) return;
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    if (removed[c]) continue;
    for (EdgeId& e : crossings[c].edges) {
      if (e == from) e = to;
    }
  }
  component[from] = 0;
}

void RawDiagram::remove_crossings(std::span<const CrossingId> ids) {
  std::vector<int> parent(component.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (CrossingId c : ids) {
    const Crossing& x = crossings[c];
    parent[find(x.edges[2])] = find(x.edges[0]);
    parent[find(x.edges[3])] = find(x.edges[1]);
    removed[c] = true;
  }
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    if (removed[c]) continue;
    for (EdgeId& e : crossings[c].edges) e = find(e);
  }
  for (int e = 0; e < static_cast<int>(component.size()); ++e) {
    if (component[e] != 0 && find(e) != e) component[e] = 0;
  }
}

LinkDiagram RawDiagram::finish(bool recompute_components,
                               std::vector<EdgeId>* renumbering) const {
  const int total = static_cast<int>(component.size());
  std::vector<EdgeId> id(total, -1);
  std::vector<int> labels;
  for (int e = 0; e < total; ++e) {
    if (component[e] == 0) continue;
    id[e] = static_cast<EdgeId>(labels.size());
    labels.push_back(component[e]);
  }
  std::vector<Crossing> xs;
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    if (removed[c]) continue;
    Crossing x = crossings[c];
    for (EdgeId& e : x.edges) e = id[e];
    xs.push_back(x);
  }

  if (recompute_components) {
    const int edges = static_cast<int>(labels.size());
    std::vector<EdgeId> succ(edges);
    std::iota(succ.begin(), succ.end(), 0);
    for (const Crossing& x : xs) {
      succ[x.edges[0]] = x.edges[2];
      succ[x.over_in()] = x.over_out();
    }
    std::vector<int> cycle(edges, -1);
    std::vector<int> cycle_label;
    for (int e = 0; e < edges; ++e) {
      if (cycle[e] != -1) continue;
      const int k = static_cast<int>(cycle_label.size());
      int lowest = labels[e];
      for (EdgeId f = e; cycle[f] == -1; f = succ[f]) {
        cycle[f] = k;
        lowest = std::min(lowest, labels[f]);
      }
      cycle_label.push_back(lowest);
    }
    // Ties (one old label split over several cycles) are ordered by first
    // appearance.
    std::vector<int> order(cycle_label.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return cycle_label[a] < cycle_label[b];
    });
    std::vector<int> rank(order.size());
    for (int r = 0; r < static_cast<int>(order.size()); ++r) rank[order[r]] = r + 1;
    for (int e = 0; e < edges; ++e) labels[e] = rank[cycle[e]];
  } else {
    std::map<int, int> compact;
    for (int l : labels) compact.emplace(l, 0);
    int next = 1;
    for (auto& [l, v] : compact) v = next++;
    for (int& l : labels) l = compact[l];
  }
  std::vector<EdgeId> canon;
  LinkDiagram out(std::move(xs), std::move(labels), &canon);
  if (renumbering) {
    renumbering->assign(total, -1);
    for (int e = 0; e < total; ++e) {
      if (id[e] != -1) (*renumbering)[e] = canon[id[e]];
    }
  }
  return out;
}

Crossing make_crossing(const std::array<EdgeId, 4>& ccw, int under_in_pos,
                       int over_in_pos) {
  Crossing x;
  for (int i = 0; i < 4; ++i) x.edges[i] = ccw[(under_in_pos + i) % 4];
  x.over_in_slot = (over_in_pos - under_in_pos + 4) % 4;
  return x;
}

std::vector<std::vector<EdgeId>> insert_braid(RawDiagram& raw,
                                              std::span<const Dart> strands,
                                              std::span<const int> word) {
  const int m = static_cast<int>(strands.size());
  std::vector<std::optional<EdgeEnd>> top(m);
  for (int k = 0; k < m; ++k) {
    top[k] = strands[k].forward ? raw.head(strands[k].edge)
                                : raw.tail(strands[k].edge);
  }
  std::vector<EdgeId> open(m);
  std::vector<int> strand_at(m);
  std::vector<std::vector<EdgeId>> pieces(m);
  for (int k = 0; k < m; ++k) {
    open[k] = strands[k].edge;
    strand_at[k] = k;
    pieces[k].push_back(strands[k].edge);
  }
  for (int letter : word) {
    const int p = std::abs(letter) - 1;
    const int left = strand_at[p];
    const int right = strand_at[p + 1];
    const EdgeId left_next = raw.new_edge(raw.component[strands[left].edge]);
    const EdgeId right_next = raw.new_edge(raw.component[strands[right].edge]);
    // Positions: 0 = SW, 1 = SE, 2 = NE, 3 = NW.
    const std::array<EdgeId, 4> ccw{open[p], open[p + 1], left_next, right_next};
    const int left_in = strands[left].forward ? 0 : 2;
    const int right_in = strands[right].forward ? 1 : 3;
    const bool right_over = letter > 0;
    raw.add_crossing(right_over ? make_crossing(ccw, left_in, right_in)
                                : make_crossing(ccw, right_in, left_in));
    open[p] = right_next;
    open[p + 1] = left_next;
    pieces[left].push_back(left_next);
    pieces[right].push_back(right_next);
    strand_at[p] = right;
    strand_at[p + 1] = left;
  }
  for (int q = 0; q < m; ++q) {
    const EdgeId original = strands[q].edge;
    if (open[q] == original) continue;
    if (top[q]) {
      raw.set_slot(*top[q], open[q]);
    } else {
      raw.merge_edge_into(open[q], original);
      auto& p = pieces[strand_at[q]];
      p.back() = original;
    }
  }
  return pieces;
}

}  // namespace mubar::detail
