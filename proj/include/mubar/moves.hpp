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

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mubar/diagram.hpp"
#include "mubar/faces.hpp"

namespace mubar {

enum class MoveKind {
  R1,
  R2,
  R3,
  CrossingChange,
  SelfCrossingChange,
  DeltaMove,
};

/// A local move and the place it acts on.
///
/// Sites by kind:
///  - R1 insertion: `darts[0].edge` receives a kink of sign `sign`;
///    `over_first` says whether the strand first passes over itself.
///  - R1 removal (`inverse`): `crossing` must carry a monogon.
///  - R2 insertion: `darts[0]` and `darts[1]` share the face on their right
///    (or lie in different pieces); `sign` = +1 pushes the first strand over
///    the second, -1 the reverse.
///  - R2 removal (`inverse`): the face right of `darts[0]` is a removable
///    bigon.
///  - R3: the face right of `darts[0]` is a triangle with one strand over
///    (or under) both others.
///  - CrossingChange / SelfCrossingChange: `crossing`.
///  - DeltaMove: `darts` are three arcs met left to right by a transverse
///    segment, each pointing across it in the same sense; `sign` selects the
///    clasp tangle or its inverse.
struct MoveSpec {
  MoveKind kind = MoveKind::R1;
  bool inverse = false;
  std::vector<Dart> darts;
  CrossingId crossing = -1;
  int sign = 1;
  bool over_first = false;
};

/// Applies a move. Throws ValidationError when the site is not valid.
LinkDiagram apply_move(const LinkDiagram& d, const MoveSpec& m);

/// True when the darts are a valid transverse arc sequence for splicing a
/// braid tangle (see MoveSpec, DeltaMove).
bool is_tangle_site(const LinkDiagram& d, const FaceMap& fm,
                    const std::vector<Dart>& darts);

/// Removal and R3 sites present in `d`.
std::vector<MoveSpec> r1_removal_sites(const LinkDiagram& d);
std::vector<MoveSpec> r2_removal_sites(const LinkDiagram& d);
std::vector<MoveSpec> r3_sites(const LinkDiagram& d);

/// A three-strand site for a Delta move, preferring strands that all point
/// the same way across the segment.
std::optional<MoveSpec> find_delta_site(const LinkDiagram& d);

/// A uniformly chosen kind among the Reidemeister moves available in `d`,
/// with a random site.
std::optional<MoveSpec> random_reidemeister_move(const LinkDiagram& d,
                                                 std::mt19937_64& rng);

/// Applies `steps` random Reidemeister moves.
LinkDiagram random_isotopy(const LinkDiagram& d, int steps, std::mt19937_64& rng,
                           std::vector<MoveSpec>* log = nullptr);

/// One-line form, 1-based: r1:E:+:over, r1x:C, r2:E,F:-, r2x:E, r3:E,
/// cc:C, scc:C, delta:E,F,G:+. A leading '-' on an edge reverses the dart.
std::string describe(const MoveSpec& m);

/// Inverse of describe(). Optional fields default to sign + and "under";
/// a bare "delta" leaves `darts` empty (the caller picks a site).
MoveSpec parse_move(std::string_view text);

}  // namespace mubar
