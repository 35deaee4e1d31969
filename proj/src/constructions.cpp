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

#include "mubar/constructions.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>

#include "mubar/error.hpp"
#include "mubar/faces.hpp"
#include "raw_diagram.hpp"

namespace mubar {

namespace {

void check_index(const LinkDiagram& d, int component) {
  if (component < 1 || component > d.component_count()) {
    throw ValidationError("component index " + std::to_string(component) +
                          " out of range 1.." +
                          std::to_string(d.component_count()));
  }
}

}  // namespace

LinkDiagram reverse_component(const LinkDiagram& d, int component) {
  check_index(d, component);
  std::vector<Crossing> xs = d.crossings();
  for (Crossing& x : xs) {
    const bool under = d.component_of(x.under_in()) == component;
    const bool over = d.component_of(x.over_in()) == component;
    if (under) {
      const Crossing old = x;
      for (int s = 0; s < 4; ++s) x.edges[s] = old.edges[(s + 2) % 4];
      x.over_in_slot ^= 2;
    }
    if (over) x.over_in_slot ^= 2;
  }
  return LinkDiagram(std::move(xs), d.edge_components());
}

LinkDiagram double_component(const LinkDiagram& d, int component) {
  check_index(d, component);
  const int copy_comp = d.component_count() + 1;
  detail::RawDiagram raw(d);
  std::map<EdgeId, EdgeId> copy;
  int writhe = 0;
  for (EdgeId g : d.component_edges(component)) copy[g] = raw.new_edge(copy_comp);

  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    const Crossing x = d.crossing(c);
    const bool v_doubled = d.component_of(x.under_in()) == component;
    const bool h_doubled = d.component_of(x.over_in()) == component;
    if (!v_doubled && !h_doubled) continue;
    if (v_doubled && h_doubled) writhe += x.sign();

    // Local frame: the under-strand runs north through column x = 0, the
    // over-strand runs east (dir = +1) or west (dir = -1) along row y = 0.
    // Copies sit on the left: column -1, row +dir.
    const int dir = x.over_in_slot == 3 ? 1 : -1;
    std::vector<int> cols{0};
    if (v_doubled) cols.insert(cols.begin(), -1);
    std::vector<int> rows{0};
    if (h_doubled) rows.push_back(dir);
    std::sort(rows.begin(), rows.end());
    const int under_comp = d.component_of(x.under_in());
    const int over_comp = d.component_of(x.over_in());

    auto port = [&](int slot, bool is_copy) {
      return is_copy ? copy.at(x.edges[slot]) : x.edges[slot];
    };
    // Horizontal pieces: between column positions in travel order.
    const int nc = static_cast<int>(cols.size());
    const int nr = static_cast<int>(rows.size());
    // vedge[ci][k] is the piece of column ci entering the k-th row (k = nr
    // is the outgoing port); hedge[ri][k] likewise in travel order.
    std::vector<std::vector<EdgeId>> vedge(nc), hedge(nr);
    for (int ci = 0; ci < nc; ++ci) {
      const bool cp = cols[ci] == -1;
      vedge[ci].push_back(port(0, cp));
      for (int k = 1; k < nr; ++k) {
        vedge[ci].push_back(raw.new_edge(cp ? copy_comp : under_comp));
      }
      vedge[ci].push_back(port(2, cp));
    }
    for (int ri = 0; ri < nr; ++ri) {
      const bool cp = rows[ri] != 0;
      hedge[ri].push_back(port(x.over_in_slot, cp));
      for (int k = 1; k < nc; ++k) {
        hedge[ri].push_back(raw.new_edge(cp ? copy_comp : over_comp));
      }
      hedge[ri].push_back(port(x.over_out_slot(), cp));
    }
    bool reused = false;
    for (int ci = 0; ci < nc; ++ci) {
      for (int ri = 0; ri < nr; ++ri) {
        // Travel index along the row: west to east when dir = +1.
        const int k = dir > 0 ? ci : nc - 1 - ci;
        const EdgeId h_in = hedge[ri][k];
        const EdgeId h_out = hedge[ri][k + 1];
        // Counterclockwise from south: S, E, N, W.
        const std::array<EdgeId, 4> ccw{vedge[ci][ri],
                                        dir > 0 ? h_out : h_in,
                                        vedge[ci][ri + 1],
                                        dir > 0 ? h_in : h_out};
        const Crossing nx = detail::make_crossing(ccw, 0, dir > 0 ? 3 : 1);
        if (cols[ci] == 0 && rows[ri] == 0) {
          raw.crossings[c] = nx;
          reused = true;
        } else {
          raw.add_crossing(nx);
        }
      }
    }
    (void)reused;
  }

  if (writhe != 0) {
    const EdgeId g = d.component_edges(component).front();
    const std::vector<Dart> strands{Dart{copy.at(g), true}, Dart{g, true}};
    const std::vector<int> twists(2 * std::abs(writhe), writhe > 0 ? -1 : 1);
    detail::insert_braid(raw, strands, twists);
  }
  return raw.finish();
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<Crossing> xs = a.crossings();
  std::vector<int> comps = a.edge_components();
  const int shift = a.edge_count();
  for (Crossing x : b.crossings()) {
    for (EdgeId& e : x.edges) e += shift;
    xs.push_back(x);
  }
  for (int c : b.edge_components()) comps.push_back(c + a.component_count());
  return LinkDiagram(std::move(xs), std::move(comps));
}

namespace {

// Band surgery between two edges that have the same face on their right (or
// lie in different pieces).
LinkDiagram rewire(const LinkDiagram& d, EdgeId e, EdgeId f, int merged_label) {
  detail::RawDiagram raw(d);
  const int gone = raw.component[f];
  const auto he = raw.head(e);
  const auto hf = raw.head(f);
  if (he && hf) {
    raw.set_slot(*he, f);
    raw.set_slot(*hf, e);
  } else if (!he) {
    raw.merge_edge_into(e, f);
  } else {
    raw.merge_edge_into(f, e);
  }
  for (int& c : raw.component) {
    if (c == gone) c = merged_label;
  }
  return raw.finish();
}

}  // namespace

LinkDiagram band_sum(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.component_count() != b.component_count()) {
    throw ValidationError("band sum needs diagrams with the same number of "
                          "components (" +
                          std::to_string(a.component_count()) + " vs " +
                          std::to_string(b.component_count()) + ")");
  }
  const int n = a.component_count();
  LinkDiagram cur = disjoint_union(a, b);
  for (int i = 1; i <= n; ++i) {
    // The b-side copy of component i is always at label n + 1 here.
    EdgeId e = cur.component_edges(i).front();
    for (int guard = 0;; ++guard) {
      if (guard > 4 * (cur.edge_count() + 4)) {
        throw ValidationError("band sum: could not route a band");
      }
      const FaceMap fm = face_map(cur);
      const auto targets = cur.component_edges(n + 1);
      const Dart tip{e, true};
      if (fm.piece(tip) != fm.edge_piece[targets.front()]) {
        cur = rewire(cur, e, targets.front(), i);
        break;
      }
      std::map<int, EdgeId> goal;
      for (EdgeId f : targets) goal.emplace(fm.right_face(Dart{f, true}), f);
      const int start = fm.right_face(tip);
      if (auto it = goal.find(start); it != goal.end()) {
        cur = rewire(cur, e, it->second, i);
        break;
      }
      // Breadth-first search over faces; remember the dart crossed first.
      std::vector<int> first_step(fm.faces.size(), -1);
      std::vector<bool> seen(fm.faces.size(), false);
      std::deque<int> queue{start};
      seen[start] = true;
      int found = -1;
      while (!queue.empty() && found == -1) {
        const int face = queue.front();
        queue.pop_front();
        const auto& darts = fm.faces[face];
        for (int k = 0; k < static_cast<int>(darts.size()); ++k) {
          const int next = fm.left_face(darts[k]);
          if (seen[next]) continue;
          seen[next] = true;
          first_step[next] =
              face == start ? FaceMap::dart_index(darts[k]) : first_step[face];
          if (goal.count(next)) {
            found = next;
            break;
          }
          queue.push_back(next);
        }
      }
      if (found == -1) throw ValidationError("band sum: no route between components");
      const int di = first_step[found];
      const Dart across{di / 2, di % 2 == 0};
      // Push a finger of e over the edge `across` into the next face.
      detail::RawDiagram raw(cur);
      const std::vector<Dart> strands{tip, across.reversed()};
      const std::vector<int> word{-1, 1};
      const auto pieces = detail::insert_braid(raw, strands, word);
      std::vector<EdgeId> renumber;
      cur = raw.finish(false, &renumber);
      e = renumber[pieces[0][1]];
    }
  }
  return cur;
}

}  // namespace mubar
