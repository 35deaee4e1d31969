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

#include "mubar/faces.hpp"

#include <numeric>

namespace mubar {

Dart next_on_face(const LinkDiagram& d, Dart dart) {
  const auto end = dart.forward ? d.head(dart.edge) : d.tail(dart.edge);
  if (!end) return dart;
  const Crossing& x = d.crossing(end->crossing);
  const int slot = (end->slot + 1) % 4;
  return Dart{x.edges[slot], !x.is_head_slot(slot)};
}

FaceMap face_map(const LinkDiagram& d) {
  FaceMap fm;
  const int edges = d.edge_count();
  fm.dart_face.assign(2 * edges, -1);
  for (int i = 0; i < 2 * edges; ++i) {
    if (fm.dart_face[i] != -1) continue;
    const Dart start{i / 2, i % 2 == 0};
    std::vector<Dart> face;
    Dart cur = start;
    const int id = static_cast<int>(fm.faces.size());
    do {
      fm.dart_face[FaceMap::dart_index(cur)] = id;
      face.push_back(cur);
      cur = next_on_face(d, cur);
    } while (!(cur == start));
    fm.faces.push_back(std::move(face));
  }

  std::vector<int> parent(edges);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const Crossing& x : d.crossings()) {
    for (int s = 1; s < 4; ++s) parent[find(x.edges[s])] = find(x.edges[0]);
  }
  fm.edge_piece.assign(edges, -1);
  std::vector<int> piece_id(edges, -1);
  for (int e = 0; e < edges; ++e) {
    const int r = find(e);
    if (piece_id[r] == -1) piece_id[r] = fm.piece_count++;
    fm.edge_piece[e] = piece_id[r];
  }
  return fm;
}

}  // namespace mubar
