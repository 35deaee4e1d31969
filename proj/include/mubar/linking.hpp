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

/// n x n table: lk(i, j) off the diagonal, writhe of component i on it.
/// The diagonal is diagnostic output only; writhe is not an invariant.
struct LinkingMatrix {
  int n = 0;
  std::vector<int> data;  // row-major

  int at(int i, int j) const { return data[(i - 1) * n + (j - 1)]; }
  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

/// Signed count of crossings where component i passes over component j.
int lk(const LinkDiagram& d, int i, int j);

/// Half the signed count over every crossing between i and j.
int lk_symmetrized(const LinkDiagram& d, int i, int j);

/// Signed count of the self-crossings of component i.
int writhe_component(const LinkDiagram& d, int i);

LinkingMatrix linking_matrix(const LinkDiagram& d);

/// True when the off-diagonal entries agree.
bool same_linking(const LinkingMatrix& a, const LinkingMatrix& b);

}  // namespace mubar
