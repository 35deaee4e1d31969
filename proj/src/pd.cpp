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

#include "mubar/pd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "mubar/error.hpp"

namespace mubar {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++pos_;
      } else {
        break;
      }
    }
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected X, Loop or PD", start);
    return std::string(text_.substr(start, pos_ - start));
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_ || pos_ - start > 9) {
      throw ParseError("expected a non-negative edge label", start);
    }
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Item {
  bool loop = false;
  std::array<long, 4> labels{};
  std::size_t pos = 0;
};

std::vector<Item> read_items(std::string_view text) {
  Lexer lex(text);
  std::vector<Item> items;
  bool wrapped = false;
  if (!lex.done() && lex.peek() == 'P') {
    const std::size_t at = lex.pos();
    if (lex.word() != "PD") throw ParseError("expected PD", at);
    lex.expect('[');
    wrapped = true;
  }
  while (!lex.done()) {
    if (wrapped && lex.peek() == ']') {
      lex.expect(']');
      if (!lex.done()) throw ParseError("trailing text after PD[...]", lex.pos());
      return items;
    }
    Item item;
    item.pos = lex.pos();
    const std::string head = lex.word();
    lex.expect('[');
    if (head == "X") {
      for (long& l : item.labels) l = lex.integer();
    } else if (head == "Loop") {
      item.loop = true;
      item.labels[0] = lex.integer();
    } else {
      throw ParseError("unknown item '" + head + "'", item.pos);
    }
    lex.expect(']');
    items.push_back(item);
  }
  if (wrapped) throw ParseError("missing closing ']'", lex.pos());
  return items;
}

struct Ref {
  int crossing;
  int slot;
};

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  const std::vector<Item> items = read_items(text);

  std::map<long, int> dense;
  for (const Item& it : items) {
    for (int s = 0; s < (it.loop ? 1 : 4); ++s) dense.emplace(it.labels[s], 0);
  }
  int next = 0;
  for (auto& [label, id] : dense) id = next++;
  const int edges = next;
  std::vector<long> label_of(edges);
  for (auto& [label, id] : dense) label_of[id] = label;

  std::vector<Crossing> xs;
  std::vector<std::vector<Ref>> refs(edges);
  std::vector<int> loop_count(edges, 0);
  for (const Item& it : items) {
    if (it.loop) {
      ++loop_count[dense[it.labels[0]]];
      continue;
    }
    Crossing x;
    for (int s = 0; s < 4; ++s) {
      x.edges[s] = dense[it.labels[s]];
      refs[x.edges[s]].push_back({static_cast<int>(xs.size()), s});
    }
    xs.push_back(x);
  }
  for (int e = 0; e < edges; ++e) {
    const bool ok = loop_count[e] == 0 ? refs[e].size() == 2
                                       : loop_count[e] == 1 && refs[e].empty();
    if (!ok) {
      throw ValidationError("edge label " + std::to_string(label_of[e]) +
                            " must occur exactly twice in crossings or once "
                            "as a Loop");
    }
  }

  // Walk every strand cycle in both directions and keep the direction that
  // respects the under slots.
  std::vector<int> component(edges, 0);
  std::vector<bool> seen(edges, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < edges; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    if (loop_count[start]) {
      seen[start] = true;
      cycles.push_back({start});
      continue;
    }
    // Traverse leaving refs[start][0], arriving at refs[start][1].
    int e = start;
    Ref arrive = refs[start][1];
    std::vector<std::pair<Ref, Ref>> ends;  // (leave, arrive) per edge
    Ref leave = refs[start][0];
    while (!seen[e]) {
      seen[e] = true;
      cyc.push_back(e);
      ends.push_back({leave, arrive});
      const int f = xs[arrive.crossing].edges[arrive.slot ^ 2];
      const Ref out{arrive.crossing, arrive.slot ^ 2};
      const Ref& r0 = refs[f][0];
      const bool first = r0.crossing == out.crossing && r0.slot == out.slot;
      leave = out;
      arrive = first ? refs[f][1] : refs[f][0];
      e = f;
    }
    bool fwd_ok = true, bwd_ok = true, constrained = false;
    for (const auto& [lv, ar] : ends) {
      if (lv.slot % 2 == 0 || ar.slot % 2 == 0) constrained = true;
      if (ar.slot == 2 || lv.slot == 0) fwd_ok = false;
      if (lv.slot == 2 || ar.slot == 0) bwd_ok = false;
    }
    if (constrained && !fwd_ok && !bwd_ok) {
      throw ValidationError("edge label " + std::to_string(label_of[start]) +
                            " lies on a strand whose under-crossings disagree "
                            "on its orientation");
    }
    bool forward = fwd_ok;
    if (!constrained) {
      // Increasing labels along the strand; cyc[0] is the smallest label.
      if (cyc.size() > 2) {
        forward = label_of[cyc[1]] < label_of[cyc.back()];
      } else if (cyc.size() == 2) {
        // Smallest label leaves the later-listed crossing.
        forward = ends[0].first.crossing > ends[0].second.crossing;
      }
    }
    for (const auto& [lv, ar] : ends) {
      const Ref& h = forward ? ar : lv;
      if (h.slot % 2 == 1) xs[h.crossing].over_in_slot = h.slot;
    }
    cycles.push_back(std::move(cyc));
  }
  // Cycles were discovered in increasing order of their smallest label.
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
    for (int e : cycles[c]) component[e] = c + 1;
  }
  return LinkDiagram(std::move(xs), std::move(component));
}

std::string to_pd(const LinkDiagram& d) {
  const int n = d.crossing_count();
  // Ordering constraints that let the parser recover the orientation of
  // two-edge components that never pass under.
  std::vector<std::vector<int>> after(n);
  std::vector<int> indegree(n, 0);
  for (int c = 1; c <= d.component_count(); ++c) {
    const auto es = d.component_edges(c);
    if (es.size() != 2) continue;
    bool all_over = true;
    for (EdgeId e : es) {
      all_over = all_over && d.head(e)->slot % 2 == 1 && d.tail(e)->slot % 2 == 1;
    }
    const int h = d.head(es[0])->crossing;
    const int t = d.tail(es[0])->crossing;
    if (!all_over || h == t) continue;
    after[h].push_back(t);
    ++indegree[t];
  }
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (bool progress = true; progress;) {
    progress = false;
    for (int c = 0; c < n; ++c) {
      if (placed[c] || indegree[c] != 0) continue;
      placed[c] = true;
      order.push_back(c);
      for (int t : after[c]) --indegree[t];
      progress = true;
      break;
    }
  }
  for (int c = 0; c < n; ++c) {
    if (!placed[c]) order.push_back(c);
  }

  std::ostringstream out;
  out << "PD[";
  bool first = true;
  for (int c : order) {
    const Crossing& x = d.crossing(c);
    out << (first ? "" : ", ") << "X[" << x.edges[0] + 1 << ',' << x.edges[1] + 1
        << ',' << x.edges[2] + 1 << ',' << x.edges[3] + 1 << ']';
    first = false;
  }
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    if (d.is_free_loop(e)) {
      out << (first ? "" : ", ") << "Loop[" << e + 1 << ']';
      first = false;
    }
  }
  out << ']';
  return out.str();
}

}  // namespace mubar
