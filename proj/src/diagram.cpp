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

#include "mubar/diagram.hpp"

#include <algorithm>
#include <string>

#include "mubar/error.hpp"

namespace mubar {

namespace {

struct Incidence {
  std::vector<std::optional<EdgeEnd>> tail;
  std::vector<std::optional<EdgeEnd>> head;
};

Incidence incidence(const std::vector<Crossing>& crossings, int edge_count) {
  Incidence inc;
  inc.tail.assign(edge_count, std::nullopt);
  inc.head.assign(edge_count, std::nullopt);
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    const Crossing& x = crossings[c];
    if (x.over_in_slot != 1 && x.over_in_slot != 3) {
      throw ValidationError("crossing " + std::to_string(c) +
                            " has an over-strand entering at an under slot");
    }
    for (int s = 0; s < 4; ++s) {
      const EdgeId e = x.edges[s];
      if (e < 0 || e >= edge_count) {
        throw ValidationError("crossing " + std::to_string(c) +
                              " references unknown edge " + std::to_string(e));
      }
      auto& end = x.is_head_slot(s) ? inc.head[e] : inc.tail[e];
      if (end) {
        throw ValidationError("edge " + std::to_string(e) +
                              " is used more than twice or with inconsistent "
                              "orientation");
      }
      end = EdgeEnd{c, s};
    }
  }
  for (int e = 0; e < edge_count; ++e) {
    if (inc.tail[e].has_value() != inc.head[e].has_value()) {
      throw ValidationError("edge " + std::to_string(e) +
                            " does not run between two crossing slots");
    }
  }
  return inc;
}

EdgeId next_edge(const std::vector<Crossing>& crossings, const Incidence& inc,
                 EdgeId e) {
  if (!inc.head[e]) return e;
  const EdgeEnd h = *inc.head[e];
  return crossings[h.crossing].edges[h.slot ^ 2];
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings,
                         std::vector<int> edge_component,
                         std::vector<EdgeId>* renumbering) {
  const int edge_count = static_cast<int>(edge_component.size());
  int n = 0;
  for (int c : edge_component) {
    if (c < 1) throw ValidationError("component indices start at 1");
    n = std::max(n, c);
  }
  std::vector<int> sizes(n + 1, 0);
  for (int c : edge_component) ++sizes[c];
  for (int c = 1; c <= n; ++c) {
    if (sizes[c] == 0) {
      throw ValidationError("component " + std::to_string(c) + " has no edges");
    }
  }

  const Incidence inc = incidence(crossings, edge_count);
  for (const Crossing& x : crossings) {
    if (edge_component[x.edges[0]] != edge_component[x.edges[2]] ||
        edge_component[x.edges[1]] != edge_component[x.edges[3]]) {
      throw ValidationError("a strand changes component through a crossing");
    }
  }

  // Each component must be a single successor cycle.
  std::vector<int> lowest(n + 1, edge_count);
  for (int e = 0; e < edge_count; ++e) {
    lowest[edge_component[e]] = std::min(lowest[edge_component[e]], e);
  }
  std::vector<EdgeId> new_id(edge_count, -1);
  std::vector<int> component;
  component.reserve(edge_count);
  int next = 0;
  first_edge_.clear();
  for (int c = 1; c <= n; ++c) {
    first_edge_.push_back(next);
    EdgeId e = lowest[c];
    int walked = 0;
    do {
      if (new_id[e] != -1) break;
      new_id[e] = next++;
      component.push_back(c);
      ++walked;
      e = next_edge(crossings, inc, e);
    } while (e != lowest[c]);
    if (walked != sizes[c] || e != lowest[c]) {
      throw ValidationError("component " + std::to_string(c) +
                            " is not a single closed strand");
    }
  }
  first_edge_.push_back(next);

  for (Crossing& x : crossings) {
    for (EdgeId& e : x.edges) e = new_id[e];
  }
  if (renumbering) *renumbering = new_id;
  crossings_ = std::move(crossings);
  component_ = std::move(component);
  component_count_ = n;
  Incidence canon = incidence(crossings_, edge_count);
  tail_ = std::move(canon.tail);
  head_ = std::move(canon.head);
}

const Crossing& LinkDiagram::crossing(CrossingId c) const {
  if (c < 0 || c >= crossing_count()) {
    throw ValidationError("unknown crossing " + std::to_string(c));
  }
  return crossings_[c];
}

void LinkDiagram::check_edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) {
    throw ValidationError("unknown edge " + std::to_string(e));
  }
}

void LinkDiagram::check_component(int component) const {
  if (component < 1 || component > component_count_) {
    throw ValidationError("component index " + std::to_string(component) +
                          " out of range 1.." +
                          std::to_string(component_count_));
  }
}

int LinkDiagram::component_of(EdgeId e) const {
  check_edge(e);
  return component_[e];
}

EdgeId LinkDiagram::successor(EdgeId e) const {
  check_edge(e);
  if (!head_[e]) return e;
  return crossings_[head_[e]->crossing].edges[head_[e]->slot ^ 2];
}

EdgeId LinkDiagram::predecessor(EdgeId e) const {
  check_edge(e);
  if (!tail_[e]) return e;
  return crossings_[tail_[e]->crossing].edges[tail_[e]->slot ^ 2];
}

std::optional<EdgeEnd> LinkDiagram::tail(EdgeId e) const {
  check_edge(e);
  return tail_[e];
}

std::optional<EdgeEnd> LinkDiagram::head(EdgeId e) const {
  check_edge(e);
  return head_[e];
}

bool LinkDiagram::is_free_loop(EdgeId e) const {
  check_edge(e);
  return !head_[e];
}

std::vector<EdgeId> LinkDiagram::component_edges(int component) const {
  check_component(component);
  std::vector<EdgeId> out;
  for (EdgeId e = first_edge_[component - 1]; e < first_edge_[component]; ++e) {
    out.push_back(e);
  }
  return out;
}

int LinkDiagram::under_component(CrossingId c) const {
  return component_[crossing(c).under_in()];
}

int LinkDiagram::over_component(CrossingId c) const {
  return component_[crossing(c).over_in()];
}

bool LinkDiagram::is_self_crossing(CrossingId c) const {
  return under_component(c) == over_component(c);
}

namespace {

// Relabels `d` so that each component is walked from the chosen start edge and
// returns the sorted crossing list.
std::vector<Crossing> relabeled(const LinkDiagram& d,
                                const std::vector<EdgeId>& starts) {
  std::vector<EdgeId> id(d.edge_count(), -1);
  int next = 0;
  for (EdgeId start : starts) {
    EdgeId e = start;
    do {
      id[e] = next++;
      e = d.successor(e);
    } while (e != start);
  }
  std::vector<Crossing> xs = d.crossings();
  for (Crossing& x : xs) {
    for (EdgeId& e : x.edges) e = id[e];
  }
  auto key = [](const Crossing& x) {
    return std::make_pair(x.edges, x.over_in_slot);
  };
  std::sort(xs.begin(), xs.end(),
            [&](const Crossing& a, const Crossing& b) { return key(a) < key(b); });
  return xs;
}

}  // namespace

bool isomorphic(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.component_count() != b.component_count() ||
      a.crossing_count() != b.crossing_count() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  const int n = a.component_count();
  std::vector<std::vector<EdgeId>> candidates;
  std::vector<EdgeId> a_starts;
  for (int c = 1; c <= n; ++c) {
    auto ea = a.component_edges(c);
    auto eb = b.component_edges(c);
    if (ea.size() != eb.size()) return false;
    a_starts.push_back(ea.front());
    candidates.push_back(std::move(eb));
  }
  const std::vector<Crossing> target = relabeled(a, a_starts);

  std::vector<std::size_t> pick(n, 0);
  constexpr long kMaxCombinations = 4'000'000;
  for (long tried = 0; tried < kMaxCombinations; ++tried) {
    std::vector<EdgeId> starts(n);
    for (int c = 0; c < n; ++c) starts[c] = candidates[c][pick[c]];
    if (relabeled(b, starts) == target) return true;
    int c = 0;
    while (c < n && ++pick[c] == candidates[c].size()) pick[c++] = 0;
    if (c == n) return false;
  }
  throw ResourceError("diagram isomorphism search exceeded its budget");
}

}  // namespace mubar
