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

#include "mubar/linking.hpp"

#include <string>

#include "mubar/error.hpp"

namespace mubar {

namespace {

void check_pair(const LinkDiagram& d, int i, int j) {
  const int n = d.component_count();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw ValidationError("component pair (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") out of range 1.." +
                          std::to_string(n));
  }
  if (i == j) throw ValidationError("lk needs distinct components; use writhe");
}

}  // namespace

int lk(const LinkDiagram& d, int i, int j) {
  check_pair(d, i, j);
  int total = 0;
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    if (d.over_component(c) == i && d.under_component(c) == j) {
      total += d.crossing(c).sign();
    }
  }
  return total;
}

int lk_symmetrized(const LinkDiagram& d, int i, int j) {
  check_pair(d, i, j);
  int total = 0;
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    const int o = d.over_component(c);
    const int u = d.under_component(c);
    if ((o == i && u == j) || (o == j && u == i)) total += d.crossing(c).sign();
  }
  if (total % 2 != 0) {
    throw ValidationError("odd number of crossings between two components");
  }
  return total / 2;
}

int writhe_component(const LinkDiagram& d, int i) {
  if (i < 1 || i > d.component_count()) {
    throw ValidationError("component index " + std::to_string(i) +
                          " out of range");
  }
  int total = 0;
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    if (d.over_component(c) == i && d.under_component(c) == i) {
      total += d.crossing(c).sign();
    }
  }
  return total;
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  const int n = d.component_count();
  LinkingMatrix m{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    const int o = d.over_component(c);
    const int u = d.under_component(c);
    // Entry (i, j) counts i over j, so summing both orders is unnecessary.
    m.data[(o - 1) * n + (u - 1)] += d.crossing(c).sign();
  }
  return m;
}

bool same_linking(const LinkingMatrix& a, const LinkingMatrix& b) {
  if (a.n != b.n) return false;
  for (int i = 1; i <= a.n; ++i) {
    for (int j = 1; j <= a.n; ++j) {
      if (i != j && a.at(i, j) != b.at(i, j)) return false;
    }
  }
  return true;
}

}  // namespace mubar
