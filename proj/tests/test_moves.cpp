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

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "mubar/error.hpp"
#include "mubar/linking.hpp"
#include "mubar/milnor.hpp"
#include "mubar/moves.hpp"

using namespace mubar;

namespace {

MoveSpec kink(EdgeId e, int sign, bool over_first) {
  MoveSpec m;
  m.kind = MoveKind::R1;
  m.darts = {Dart{e, true}};
  m.sign = sign;
  m.over_first = over_first;
  return m;
}

MoveSpec at_crossing(MoveKind kind, CrossingId c) {
  MoveSpec m;
  m.kind = kind;
  m.crossing = c;
  return m;
}

}  // namespace

TEST_CASE("R1 insertion and removal") {
  for (const auto& [name, d] : test::all_fixtures()) {
    CAPTURE(name);
    const MilnorTable t = milnor_table(d, 3);
    for (int sign : {1, -1}) {
      for (bool over : {false, true}) {
        const LinkDiagram e = apply_move(d, kink(0, sign, over));
        CHECK(e.crossing_count() == d.crossing_count() + 1);
        CHECK(writhe_component(e, 1) == writhe_component(d, 1) + sign);
        CHECK(same_residues(milnor_table(e, 3), t));
        const auto sites = r1_removal_sites(e);
        REQUIRE_FALSE(sites.empty());
        bool back = false;
        for (const MoveSpec& s : sites) back = back || isomorphic(apply_move(e, s), d);
        CHECK(back);
      }
    }
  }
}

TEST_CASE("R2 insertion and removal") {
  const LinkDiagram d = parse_braid("", 2);
  MoveSpec m;
  m.kind = MoveKind::R2;
  // Two free loops lie in different pieces, so any darts qualify.
  m.darts = {Dart{0, true}, Dart{1, true}};
  const LinkDiagram e = apply_move(d, m);
  CHECK(e.crossing_count() == 2);
  CHECK(lk(e, 1, 2) == 0);
  const auto sites = r2_removal_sites(e);
  REQUIRE_FALSE(sites.empty());
  CHECK(isomorphic(apply_move(e, sites.front()), d));
}

TEST_CASE("R3 sites keep the crossing count and the invariants") {
  std::mt19937_64 rng(5);
  int seen = 0;
  for (const auto& [name, d0] : test::all_fixtures()) {
    LinkDiagram d = random_isotopy(d0, 6, rng);
    const MilnorTable t = milnor_table(d0, 3);
    for (const MoveSpec& s : r3_sites(d)) {
      const LinkDiagram e = apply_move(d, s);
      CHECK(e.crossing_count() == d.crossing_count());
      CHECK(same_residues(milnor_table(e, 3), t));
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("CrossingChange on a Hopf crossing") {
  const LinkDiagram h = test::hopf();
  const LinkDiagram e = apply_move(h, at_crossing(MoveKind::CrossingChange, 0));
  CHECK(lk(h, 1, 2) == 1);
  CHECK(lk_symmetrized(e, 1, 2) == 0);
  CHECK_THROWS_AS(apply_move(h, at_crossing(MoveKind::SelfCrossingChange, 0)),
                  ValidationError);
  CHECK_THROWS_AS(apply_move(h, at_crossing(MoveKind::CrossingChange, 7)),
                  ValidationError);
}

TEST_CASE("property: lk changes by the crossing sign under CrossingChange") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    BraidWord w;
    for (int k = 1 + static_cast<int>(rng() % 8); k > 0; --k) {
      const int g = 1 + static_cast<int>(rng() % 2);
      w.push_back(rng() % 2 ? g : -g);
    }
    const LinkDiagram d = braid_closure(w, 3);
    const CrossingId c = static_cast<CrossingId>(rng() % d.crossing_count());
    const int i = d.over_component(c);
    const int j = d.under_component(c);
    if (i == j) continue;
    const LinkDiagram e = apply_move(d, at_crossing(MoveKind::CrossingChange, c));
    CHECK(lk_symmetrized(e, i, j) ==
          lk_symmetrized(d, i, j) - d.crossing(c).sign());
  }
}

TEST_CASE("SelfCrossingChange on the Whitehead clasp") {
  const LinkDiagram w = test::whitehead();
  const int I[] = {1, 2};
  int changed = 0;
  for (CrossingId c = 0; c < w.crossing_count(); ++c) {
    if (!w.is_self_crossing(c)) continue;
    const LinkDiagram e = apply_move(w, at_crossing(MoveKind::SelfCrossingChange, c));
    CHECK(mu_bar(e, I) == Residue{0, 0});
    ++changed;
  }
  CHECK(changed > 0);
}

TEST_CASE("DeltaMove on the trivial 3-braid closure") {
  const LinkDiagram d = parse_braid("", 3);
  const auto site = find_delta_site(d);
  REQUIRE(site.has_value());
  for (int sign : {1, -1}) {
    MoveSpec m = *site;
    m.sign = sign;
    const LinkDiagram e = apply_move(d, m);
    CHECK(e.crossing_count() == 6);
    CHECK(same_linking(linking_matrix(e), linking_matrix(d)));
    const int I[] = {1, 2, 3};
    CHECK(abs(mu(e, I)) == 1);
  }
}

TEST_CASE("parse_move inverts describe") {
  std::mt19937_64 rng(3);
  LinkDiagram d = test::borromean();
  for (int k = 0; k < 40; ++k) {
    const auto m = random_reidemeister_move(d, rng);
    REQUIRE(m.has_value());
    const MoveSpec back = parse_move(describe(*m));
    CHECK(describe(back) == describe(*m));
    CHECK(apply_move(d, back) == apply_move(d, *m));
    d = apply_move(d, *m);
  }
  CHECK(parse_move("cc:3").crossing == 2);
  CHECK(parse_move("r2:-4,5:-").darts[0] == Dart{3, false});
  CHECK(parse_move("delta").darts.empty());
  CHECK_THROWS_AS(parse_move("r9:1"), ParseError);
  CHECK_THROWS_AS(parse_move("r1"), ParseError);
  CHECK_THROWS_AS(parse_move("cc:0"), ParseError);
}
