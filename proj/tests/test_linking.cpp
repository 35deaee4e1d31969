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
#include <string>

#include "fixtures.hpp"
#include "mubar/error.hpp"
#include "mubar/linking.hpp"
#include "mubar/milnor.hpp"
#include "mubar/moves.hpp"

using namespace mubar;

namespace {

std::string sigma1_power(int p) {
  std::string w;
  for (int k = 0; k < p; ++k) w += "1 ";
  return w;
}

}  // namespace

TEST_CASE("lk of Hopf powers") {
  for (int n = 1; n <= 3; ++n) {
    const LinkDiagram d = parse_braid(sigma1_power(2 * n), 2);
    CHECK(lk(d, 1, 2) == n);
    CHECK(lk(d, 2, 1) == n);
  }
}

TEST_CASE("lk on the fixtures") {
  const LinkDiagram b = test::borromean();
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i != j) CHECK(lk(b, i, j) == 0);
    }
  }
  CHECK(lk_symmetrized(test::whitehead(), 1, 2) == 0);
  CHECK(lk_symmetrized(parse_braid("", 2), 1, 2) == 0);
  CHECK(lk_symmetrized(test::hopf(), 1, 2) == 1);
  CHECK_THROWS_AS(lk(b, 2, 2), ValidationError);
  CHECK_THROWS_AS(lk(b, 0, 1), ValidationError);
  CHECK_THROWS_AS(lk_symmetrized(b, 1, 4), ValidationError);
}

TEST_CASE("writhe_component") {
  const LinkDiagram h = test::hopf();
  CHECK(writhe_component(h, 1) == 0);
  CHECK(writhe_component(h, 2) == 0);
  CHECK(writhe_component(parse_braid("1 1 1", 2), 1) == 3);
  CHECK_THROWS_AS(writhe_component(h, 3), ValidationError);
}

TEST_CASE("linking_matrix") {
  const LinkingMatrix u = linking_matrix(parse_braid("", 2));
  CHECK(u.data == std::vector<int>{0, 0, 0, 0});
  const LinkingMatrix h2 = linking_matrix(parse_braid("1 1 1 1", 2));
  CHECK(h2.at(1, 2) == 2);
  CHECK(h2.at(2, 1) == 2);
  const LinkingMatrix b = linking_matrix(test::borromean());
  CHECK(same_linking(b, linking_matrix(parse_braid("", 3))));
}

TEST_CASE("property: lk symmetric, equal to lk_symmetrized and to mu(ij)") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int s = 2 + static_cast<int>(rng() % 3);
    BraidWord w;
    for (int k = static_cast<int>(rng() % 10); k > 0; --k) {
      const int g = 1 + static_cast<int>(rng() % (s - 1));
      w.push_back(rng() % 2 ? g : -g);
    }
    const LinkDiagram d = braid_closure(w, s);
    MilnorEngine engine(d);
    for (int i = 1; i <= d.component_count(); ++i) {
      for (int j = 1; j <= d.component_count(); ++j) {
        if (i == j) continue;
        CHECK(lk(d, i, j) == lk(d, j, i));
        CHECK(lk(d, i, j) == lk_symmetrized(d, i, j));
        const int I[] = {i, j};
        CHECK(engine.mu(I) == lk(d, i, j));
      }
    }
  }
}

TEST_CASE("property: lk invariant under R-moves and self-crossing changes") {
  std::mt19937_64 rng(29);
  for (const auto& [name, d] : test::all_fixtures()) {
    const LinkingMatrix m = linking_matrix(d);
    for (int trial = 0; trial < 20; ++trial) {
      const LinkDiagram e = random_isotopy(d, 8, rng);
      CHECK(same_linking(linking_matrix(e), m));
      for (CrossingId c = 0; c < e.crossing_count(); ++c) {
        if (!e.is_self_crossing(c)) continue;
        MoveSpec scc;
        scc.kind = MoveKind::SelfCrossingChange;
        scc.crossing = c;
        CHECK(same_linking(linking_matrix(apply_move(e, scc)), m));
        break;
      }
    }
  }
}
