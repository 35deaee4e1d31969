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

#include "mubar/diagram.hpp"

namespace mubar {

/// Reverses the orientation of one component (1-based index).
LinkDiagram reverse_component(const LinkDiagram& d, int component);

/// Adds component n+1, a parallel copy of `component` running on its left,
/// twisted against it so the two have linking number zero.
LinkDiagram double_component(const LinkDiagram& d, int component);

/// Both diagrams side by side; the components of `b` follow those of `a`.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

/// Joins component i of `a` to component i of `b` by an untwisted band for
/// every i. The band for component i starts at the lowest-numbered edge of
/// that component on each side; when the two ends do not share a face the
/// `a` end is pushed across the intervening strands (over them) first.
LinkDiagram band_sum(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace mubar
