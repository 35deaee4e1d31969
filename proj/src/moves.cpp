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

#include "mubar/moves.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "mubar/error.hpp"
#include "raw_diagram.hpp"

namespace mubar {

namespace {

LinkDiagram insert_kink(const LinkDiagram& d, EdgeId e, int sign,
                        bool over_first) {
  if (e < 0 || e >= d.edge_count()) {
    throw ValidationError("R1: unknown edge " + std::to_string(e));
  }
  detail::RawDiagram raw(d);
  const auto head = raw.head(e);
  const int comp = raw.component[e];
  const EdgeId loop = raw.new_edge(comp);
  const EdgeId after = head ? raw.new_edge(comp) : e;
  int in1, out1, in2, out2;
  if (!over_first) {
    in1 = 0;
    out1 = 2;
    in2 = sign > 0 ? 1 : 3;
    out2 = in2 ^ 2;
  } else {
    in1 = sign > 0 ? 1 : 3;
    out1 = in1 ^ 2;
    in2 = 0;
    out2 = 2;
  }
  Crossing k;
  k.edges[in1] = e;
  k.edges[out1] = loop;
  k.edges[in2] = loop;
  k.edges[out2] = after;
  k.over_in_slot = sign > 0 ? 1 : 3;
  if (head) raw.set_slot(*head, after);
  raw.add_crossing(k);
  return raw.finish();
}

bool has_monogon(const Crossing& x) {
  for (int s = 0; s < 4; ++s) {
    if (x.edges[s] == x.edges[(s + 1) % 4]) return true;
  }
  return false;
}

struct Polygon {
  std::vector<CrossingId> corners;  // crossing each dart arrives at
  std::vector<Dart> darts;
};

std::optional<Polygon> polygon(const LinkDiagram& d, const FaceMap& fm,
                               Dart dart, std::size_t sides) {
  const auto& face = fm.faces[fm.right_face(dart)];
  if (face.size() != sides) return std::nullopt;
  Polygon p;
  std::set<CrossingId> corners;
  std::set<EdgeId> edges;
  for (const Dart& x : face) {
    const auto end = x.forward ? d.head(x.edge) : d.tail(x.edge);
    if (!end) return std::nullopt;
    const auto other = x.forward ? d.tail(x.edge) : d.head(x.edge);
    if (other->crossing == end->crossing) return std::nullopt;
    p.corners.push_back(end->crossing);
    p.darts.push_back(x);
    corners.insert(end->crossing);
    edges.insert(x.edge);
  }
  if (corners.size() != sides || edges.size() != sides) return std::nullopt;
  return p;
}

// Parity of the slot (0 = under, 1 = over) an edge has at both of its ends,
// or -1 when it differs.
int strand_level(const LinkDiagram& d, EdgeId e) {
  const int a = d.tail(e)->slot % 2;
  const int b = d.head(e)->slot % 2;
  return a == b ? a : -1;
}

bool is_removable_bigon(const LinkDiagram& d, const FaceMap& fm, Dart dart) {
  const auto p = polygon(d, fm, dart, 2);
  return p && strand_level(d, p->darts[0].edge) != -1;
}

bool is_r3_triangle(const LinkDiagram& d, const FaceMap& fm, Dart dart) {
  const auto p = polygon(d, fm, dart, 3);
  if (!p) return false;
  for (const Dart& x : p->darts) {
    if (strand_level(d, x.edge) != -1) return true;
  }
  return false;
}

LinkDiagram apply_r3(const LinkDiagram& d, Dart dart) {
  const FaceMap fm = face_map(d);
  if (!is_r3_triangle(d, fm, dart)) {
    throw ValidationError("R3: the face is not a movable triangle");
  }
  const auto p = polygon(d, fm, dart, 3);
  std::vector<Crossing> xs = d.crossings();
  const std::vector<Crossing>& old = d.crossings();
  for (const Dart& t : p->darts) {
    const EdgeEnd v = *d.tail(t.edge);
    const EdgeEnd w = *d.head(t.edge);
    const EdgeId ext_v = old[v.crossing].edges[v.slot ^ 2];
    const EdgeId ext_w = old[w.crossing].edges[w.slot ^ 2];
    xs[v.crossing].edges[v.slot] = ext_w;
    xs[v.crossing].edges[v.slot ^ 2] = t.edge;
    xs[w.crossing].edges[w.slot] = ext_v;
    xs[w.crossing].edges[w.slot ^ 2] = t.edge;
  }
  return LinkDiagram(std::move(xs), d.edge_components());
}

LinkDiagram splice(const LinkDiagram& d, const std::vector<Dart>& strands,
                   const std::vector<int>& word) {
  detail::RawDiagram raw(d);
  detail::insert_braid(raw, strands, word);
  return raw.finish();
}

Crossing flipped(const Crossing& x) {
  Crossing y;
  const int o = x.over_in_slot;
  for (int i = 0; i < 4; ++i) y.edges[i] = x.edges[(o + i) % 4];
  y.over_in_slot = 4 - o;
  return y;
}

void check_darts(const LinkDiagram& d, const MoveSpec& m, std::size_t count) {
  if (m.darts.size() != count) {
    throw ValidationError(describe(m) + ": expected " + std::to_string(count) +
                          " arc(s)");
  }
  for (const Dart& x : m.darts) {
    if (x.edge < 0 || x.edge >= d.edge_count()) {
      throw ValidationError(describe(m) + ": unknown edge " +
                            std::to_string(x.edge));
    }
  }
}

}  // namespace

bool is_tangle_site(const LinkDiagram& d, const FaceMap& fm,
                    const std::vector<Dart>& darts) {
  std::set<EdgeId> edges;
  for (const Dart& x : darts) {
    if (x.edge < 0 || x.edge >= d.edge_count()) return false;
    edges.insert(x.edge);
  }
  if (edges.size() != darts.size()) return false;
  std::set<int> pieces{fm.piece(darts.front())};
  std::set<int> faces;
  for (std::size_t k = 0; k + 1 < darts.size(); ++k) {
    const Dart up = darts[k];
    const Dart next_down = darts[k + 1].reversed();
    if (fm.piece(up) == fm.piece(next_down)) {
      const int f = fm.right_face(up);
      if (f != fm.right_face(next_down) || !faces.insert(f).second) return false;
    } else if (!pieces.insert(fm.piece(next_down)).second) {
      return false;
    }
  }
  return true;
}

LinkDiagram apply_move(const LinkDiagram& d, const MoveSpec& m) {
  switch (m.kind) {
    case MoveKind::R1: {
      if (!m.inverse) {
        check_darts(d, m, 1);
        return insert_kink(d, m.darts[0].edge, m.sign, m.over_first);
      }
      if (!has_monogon(d.crossing(m.crossing))) {
        throw ValidationError("R1 removal: crossing " +
                              std::to_string(m.crossing) + " has no monogon");
      }
      detail::RawDiagram raw(d);
      const CrossingId c = m.crossing;
      raw.remove_crossings(std::span<const CrossingId>(&c, 1));
      return raw.finish();
    }
    case MoveKind::R2: {
      check_darts(d, m, m.inverse ? 1 : 2);
      const FaceMap fm = face_map(d);
      if (m.inverse) {
        if (!is_removable_bigon(d, fm, m.darts[0])) {
          throw ValidationError("R2 removal: the face is not a removable bigon");
        }
        const auto p = polygon(d, fm, m.darts[0], 2);
        detail::RawDiagram raw(d);
        raw.remove_crossings(p->corners);
        return raw.finish();
      }
      const std::vector<Dart> strands{m.darts[0], m.darts[1].reversed()};
      if (!is_tangle_site(d, fm, strands)) {
        throw ValidationError("R2: the arcs do not share a face");
      }
      return splice(d, strands,
                    m.sign > 0 ? std::vector<int>{-1, 1} : std::vector<int>{1, -1});
    }
    case MoveKind::R3:
      check_darts(d, m, 1);
      return apply_r3(d, m.darts[0]);
    case MoveKind::SelfCrossingChange:
      if (!d.is_self_crossing(m.crossing)) {
        throw ValidationError("self-crossing change: crossing " +
                              std::to_string(m.crossing) +
                              " joins two different components");
      }
      [[fallthrough]];
    case MoveKind::CrossingChange: {
      std::vector<Crossing> xs = d.crossings();
      xs[m.crossing] = flipped(d.crossing(m.crossing));
      return LinkDiagram(std::move(xs), d.edge_components());
    }
    case MoveKind::DeltaMove: {
      check_darts(d, m, 3);
      if (!is_tangle_site(d, face_map(d), m.darts)) {
        throw ValidationError("Delta move: the arcs are not met in order by a "
                              "transverse segment");
      }
      const std::vector<int> clasp =
          m.sign > 0 ? std::vector<int>{1, -2, 1, -2, 1, -2}
                     : std::vector<int>{2, -1, 2, -1, 2, -1};
      return splice(d, m.darts, clasp);
    }
  }
  throw ValidationError("unknown move kind");
}

std::vector<MoveSpec> r1_removal_sites(const LinkDiagram& d) {
  std::vector<MoveSpec> out;
  for (CrossingId c = 0; c < d.crossing_count(); ++c) {
    if (has_monogon(d.crossing(c))) {
      MoveSpec m;
      m.kind = MoveKind::R1;
      m.inverse = true;
      m.crossing = c;
      out.push_back(m);
    }
  }
  return out;
}

std::vector<MoveSpec> r2_removal_sites(const LinkDiagram& d) {
  const FaceMap fm = face_map(d);
  std::vector<MoveSpec> out;
  for (const auto& face : fm.faces) {
    if (is_removable_bigon(d, fm, face.front())) {
      MoveSpec m;
      m.kind = MoveKind::R2;
      m.inverse = true;
      m.darts = {face.front()};
      out.push_back(m);
    }
  }
  return out;
}

std::vector<MoveSpec> r3_sites(const LinkDiagram& d) {
  const FaceMap fm = face_map(d);
  std::vector<MoveSpec> out;
  for (const auto& face : fm.faces) {
    if (is_r3_triangle(d, fm, face.front())) {
      MoveSpec m;
      m.kind = MoveKind::R3;
      m.darts = {face.front()};
      out.push_back(m);
    }
  }
  return out;
}

std::optional<MoveSpec> find_delta_site(const LinkDiagram& d) {
  const FaceMap fm = face_map(d);
  // Strands that can follow `a` across the segment: those bounding the face
  // on its right, or one strand of any other piece.
  std::vector<Dart> piece_starts(fm.piece_count, Dart{-1, true});
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    if (piece_starts[fm.edge_piece[e]].edge < 0) piece_starts[fm.edge_piece[e]] = {e, true};
  }
  auto followers = [&](const Dart& a) {
    std::vector<Dart> out;
    for (const Dart& x : fm.faces[fm.right_face(a)]) out.push_back(x.reversed());
    for (const Dart& x : piece_starts) {
      if (fm.piece(x) != fm.piece(a)) out.push_back(x);
    }
    return out;
  };
  std::optional<MoveSpec> fallback;
  for (int i = 0; i < 2 * d.edge_count(); ++i) {
    const Dart a1{i / 2, i % 2 == 0};
    for (const Dart& a2 : followers(a1)) {
      for (const Dart& a3 : followers(a2)) {
        const std::vector<Dart> site{a1, a2, a3};
        if (!is_tangle_site(d, fm, site)) continue;
        MoveSpec m;
        m.kind = MoveKind::DeltaMove;
        m.darts = site;
        if (a1.forward && a2.forward && a3.forward) return m;
        if (!fallback) fallback = m;
      }
    }
  }
  return fallback;
}

std::optional<MoveSpec> random_reidemeister_move(const LinkDiagram& d,
                                                 std::mt19937_64& rng) {
  auto pick = [&](int n) {
    return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng));
  };
  std::vector<std::vector<MoveSpec>> pools{r1_removal_sites(d),
                                           r2_removal_sites(d), r3_sites(d)};

  // Insertions, sampled directly.
  std::vector<MoveSpec> inserts;
  if (d.edge_count() > 0) {
    MoveSpec r1;
    r1.kind = MoveKind::R1;
    r1.darts = {Dart{pick(d.edge_count()), true}};
    r1.sign = pick(2) ? 1 : -1;
    r1.over_first = pick(2) == 1;
    inserts.push_back(r1);

    const FaceMap fm = face_map(d);
    std::vector<std::pair<Dart, Dart>> pairs;
    for (const auto& face : fm.faces) {
      for (const Dart& a : face) {
        for (const Dart& b : face) {
          if (a.edge != b.edge) pairs.emplace_back(a, b);
        }
      }
    }
    if (fm.piece_count > 1) {
      for (int tries = 0; tries < 8; ++tries) {
        const Dart a{pick(d.edge_count()), pick(2) == 0};
        const Dart b{pick(d.edge_count()), pick(2) == 0};
        if (fm.piece(a) != fm.piece(b)) pairs.emplace_back(a, b);
      }
    }
    if (!pairs.empty()) {
      const auto [a, b] = pairs[pick(static_cast<int>(pairs.size()))];
      MoveSpec r2;
      r2.kind = MoveKind::R2;
      r2.darts = {a, b};
      r2.sign = pick(2) ? 1 : -1;
      inserts.push_back(r2);
    }
  }
  for (auto& m : inserts) pools.push_back({m});
  std::erase_if(pools, [](const auto& p) { return p.empty(); });
  if (pools.empty()) return std::nullopt;
  const auto& pool = pools[pick(static_cast<int>(pools.size()))];
  return pool[pick(static_cast<int>(pool.size()))];
}

LinkDiagram random_isotopy(const LinkDiagram& d, int steps, std::mt19937_64& rng,
                           std::vector<MoveSpec>* log) {
  LinkDiagram cur = d;
  for (int i = 0; i < steps; ++i) {
    const auto m = random_reidemeister_move(cur, rng);
    if (!m) break;
    cur = apply_move(cur, *m);
    if (log) log->push_back(*m);
  }
  return cur;
}

std::string describe(const MoveSpec& m) {
  std::ostringstream out;
  switch (m.kind) {
    case MoveKind::R1: out << (m.inverse ? "r1x" : "r1"); break;
    case MoveKind::R2: out << (m.inverse ? "r2x" : "r2"); break;
    case MoveKind::R3: out << "r3"; break;
    case MoveKind::CrossingChange: out << "cc"; break;
    case MoveKind::SelfCrossingChange: out << "scc"; break;
    case MoveKind::DeltaMove: out << "delta"; break;
  }
  const bool uses_crossing =
      (m.kind == MoveKind::R1 && m.inverse) || m.kind == MoveKind::CrossingChange ||
      m.kind == MoveKind::SelfCrossingChange;
  if (uses_crossing) {
    out << ':' << m.crossing + 1;
  } else {
    char sep = ':';
    for (const Dart& x : m.darts) {
      out << sep << (x.forward ? "" : "-") << x.edge + 1;
      sep = ',';
    }
  }
  if ((m.kind == MoveKind::R1 && !m.inverse) || (m.kind == MoveKind::R2 && !m.inverse) ||
      m.kind == MoveKind::DeltaMove) {
    out << (m.sign > 0 ? ":+" : ":-");
  }
  if (m.kind == MoveKind::R1 && !m.inverse) out << (m.over_first ? ":over" : ":under");
  return out.str();
}

namespace {

int parse_index(std::string_view field, std::size_t offset) {
  int v = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || ptr != end || v < 1) {
    throw ParseError("expected a positive index, got '" + std::string(field) + "'",
                     offset);
  }
  return v;
}

}  // namespace

MoveSpec parse_move(std::string_view text) {
  std::vector<std::string_view> fields;
  std::vector<std::size_t> offsets;
  for (std::size_t start = 0;;) {
    const std::size_t colon = text.find(':', start);
    fields.push_back(text.substr(start, colon - start));
    offsets.push_back(start);
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  MoveSpec m;
  const std::string_view name = fields[0];
  bool crossing_site = false;
  if (name == "r1") {
    m.kind = MoveKind::R1;
  } else if (name == "r1x") {
    m.kind = MoveKind::R1;
    m.inverse = crossing_site = true;
  } else if (name == "r2") {
    m.kind = MoveKind::R2;
  } else if (name == "r2x") {
    m.kind = MoveKind::R2;
    m.inverse = true;
  } else if (name == "r3") {
    m.kind = MoveKind::R3;
  } else if (name == "cc") {
    m.kind = MoveKind::CrossingChange;
    crossing_site = true;
  } else if (name == "scc") {
    m.kind = MoveKind::SelfCrossingChange;
    crossing_site = true;
  } else if (name == "delta") {
    m.kind = MoveKind::DeltaMove;
  } else {
    throw ParseError("unknown move '" + std::string(name) + "'", 0);
  }
  std::size_t f = 1;
  if (f < fields.size() && fields[f] != "+" && fields[f] != "-") {
    if (crossing_site) {
      m.crossing = parse_index(fields[f], offsets[f]) - 1;
    } else {
      std::string_view list = fields[f];
      std::size_t at = offsets[f];
      while (true) {
        const std::size_t comma = list.find(',');
        std::string_view item = list.substr(0, comma);
        const bool reversed = !item.empty() && item[0] == '-';
        if (reversed) item.remove_prefix(1);
        m.darts.push_back({parse_index(item, at + reversed) - 1, !reversed});
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
        at += comma + 1;
      }
    }
    ++f;
  } else if (m.kind != MoveKind::DeltaMove) {
    throw ParseError("move '" + std::string(name) + "' needs a site", name.size());
  }
  for (; f < fields.size(); ++f) {
    if (fields[f] == "+" || fields[f] == "-") {
      m.sign = fields[f] == "+" ? 1 : -1;
    } else if (fields[f] == "over" || fields[f] == "under") {
      m.over_first = fields[f] == "over";
    } else {
      throw ParseError("unexpected field '" + std::string(fields[f]) + "'", offsets[f]);
    }
  }
  return m;
}

}  // namespace mubar
