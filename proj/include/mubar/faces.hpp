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

#include <vector>

#include "mubar/diagram.hpp"

namespace mubar {

/// The faces of a diagram's planar embedding, read off the counterclockwise
/// slot order at every crossing.
///
/// Every dart has exactly one face on its right. Connected pieces of the
/// diagram (crossings and crossingless loops that do not touch one another)
/// are split sublinks, so a face of one piece may be merged with any face of
/// another piece without changing the link.
struct FaceMap {
  std::vector<std::vector<Dart>> faces;
  std::vector<int> dart_face;   // indexed by dart_index
  std::vector<int> edge_piece;  // connected piece of each edge
  int piece_count = 0;

  static int dart_index(Dart d) noexcept { return 2 * d.edge + (d.forward ? 0 : 1); }
  int right_face(Dart d) const { return dart_face[dart_index(d)]; }
  int left_face(Dart d) const { return right_face(d.reversed()); }
  int piece(Dart d) const { return edge_piece[d.edge]; }
};

FaceMap face_map(const LinkDiagram& d);

/// The dart that follows `d` around the face on its right.
Dart next_on_face(const LinkDiagram& d, Dart dart);

}  // namespace mubar
