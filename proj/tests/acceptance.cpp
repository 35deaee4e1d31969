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

// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mubar/braid.hpp"
#include "mubar/constructions.hpp"
#include "mubar/linking.hpp"
#include "mubar/magnus.hpp"
#include "mubar/milnor.hpp"
#include "mubar/moves.hpp"
#include "mubar/pd.hpp"

using namespace mubar;

namespace {

LinkDiagram load(const std::string& name) {
  std::ifstream in(std::string(MUBAR_FIXTURE_DIR) + "/" + name);
  std::stringstream text;
  text << in.rdbuf();
  return parse_pd(text.str());
}

struct Fixture {
  std::string name;
  LinkDiagram d;
};

std::vector<Fixture> fixtures() {
  return {{"borromean", load("borromean.pd")},
          {"whitehead", load("whitehead.pd")},
          {"hopf", parse_braid("1 1", 2)},
          {"hopf2", parse_braid("1 1 1 1", 2)},
          {"unlink2", parse_braid("", 2)},
          {"trefoil", parse_braid("1 1 1", 2)}};
}

LinkDiagram random_closure(std::mt19937_64& rng, int strands, int max_len) {
  BraidWord w;
  for (int k = static_cast<int>(rng() % (max_len + 1)); k > 0; --k) {
    const int g = 1 + static_cast<int>(rng() % (strands - 1));
    w.push_back(rng() % 2 ? g : -g);
  }
  return braid_closure(w, strands);
}

// Collects failure notes for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && notes_.size() < 5) notes_.push_back(what);
    failed_ += !ok;
  }
  bool passed() const { return failed_ == 0; }
  int failed() const { return failed_; }
  int count() const { return count_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::vector<std::string> notes_;
};

bool report(int n, const std::string& title, const Check& c) {
  std::cout << "criterion " << n << ": " << (c.passed() ? "PASS" : "FAIL") << "  "
            << title << " (" << c.count() - c.failed() << "/" << c.count()
            << " checks)\n";
  for (const auto& note : c.notes()) std::cout << "    " << note << '\n';
  return c.passed();
}

bool exact_entry(const MilnorTable& t, std::initializer_list<int> I, int v) {
  const MilnorEntry& e = t.at(std::vector<int>(I));
  return e.exact && e.mu == v && e.mu_bar == v;
}

Check criterion1() {
  Check c;
  const LinkDiagram b = load("borromean.pd");
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i != j) c.expect(lk(b, i, j) == 0, "lk(" + std::to_string(i) + "," + std::to_string(j) + ") != 0");
    }
  }
  const MilnorTable t = milnor_table(b, 3);
  for (auto I : {std::vector<int>{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}) {
    const MilnorEntry& e = t.at(I);
    c.expect(e.exact && e.mu == 1, "mu_bar(" + sequence_string(I) + ") != 1");
  }
  for (auto I : {std::vector<int>{1, 3, 2}, {2, 1, 3}, {3, 2, 1}}) {
    const MilnorEntry& e = t.at(I);
    c.expect(e.exact && e.mu == -1, "mu_bar(" + sequence_string(I) + ") != -1");
  }
  MilnorEngine engine(b);
  TruncatedSeries want = TruncatedSeries::one(3, 2);
  want.add(std::vector<int>{1, 2}, 1);
  want.add(std::vector<int>{2, 1}, -1);
  c.expect(engine.longitude_series(3, 2, 2) == want, "E(lambda_3) != 1 + X1X2 - X2X1");
  return c;
}

Check criterion2() {
  Check c;
  std::string word;
  for (int n = 1; n <= 3; ++n) {
    word += "1 1 ";
    const LinkDiagram d = parse_braid(word, 2);
    c.expect(lk(d, 1, 2) == n, "lk(sigma1^" + std::to_string(2 * n) + ") != n");
    const int I[] = {1, 2};
    c.expect(mu(d, I) == n, "mu(12) != lk for n=" + std::to_string(n));
  }
  return c;
}

Check criterion3() {
  Check c;
  const LinkDiagram w = load("whitehead.pd");
  const MilnorTable t = milnor_table(w, 4);
  for (const MilnorEntry& e : t.entries) {
    if (e.I.size() <= 3) c.expect(e.mu == 0, "mu(" + sequence_string(e.I) + ") != 0");
  }
  c.expect(first_nonvanishing(t) == 4, "first non-vanishing length != 4");
  c.expect(exact_entry(t, {1, 1, 2, 2}, 1), "mu_bar(1122) != 1");

  std::vector<int> I{1, 1, 2, 2};
  LinkDiagram cabled = w;
  for (int pass = 0; pass < 2; ++pass) {
    const CablingStep step = cabling_reduce(I, cabled.component_count());
    cabled = double_component(cabled, step.component);
    I = step.I;
  }
  c.expect(I == std::vector<int>{1, 3, 2, 4}, "cabling did not produce 1324");
  c.expect(mu_bar(cabled, I) == Residue{1, 0}, "mu_bar of the doubled link at 1324 != 1");
  return c;
}

Check criterion4() {
  Check c;
  std::mt19937_64 rng(2024);
  for (const Fixture& f : fixtures()) {
    const MilnorTable t = milnor_table(f.d, 4);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<MoveSpec> log;
      const int steps = 1 + static_cast<int>(rng() % 10);
      const LinkDiagram e = random_isotopy(f.d, steps, rng, &log);
      std::string moves;
      for (const MoveSpec& m : log) moves += " " + describe(m);
      c.expect(same_residues(milnor_table(e, 4), t), f.name + ":" + moves);
    }
  }
  return c;
}

Check criterion5() {
  Check c;
  for (const Fixture& f : fixtures()) {
    for (const MilnorEntry& e : milnor_table(f.d, 4).entries) {
      c.expect(oracle_mu(f.d, e.I) == e.mu, f.name + " I=" + sequence_string(e.I));
    }
  }
  std::mt19937_64 rng(5150);
  int closures = 0;
  while (closures < 60) {
    const LinkDiagram d = random_closure(rng, 2 + static_cast<int>(rng() % 2), 8);
    if (d.component_count() > 3) continue;
    ++closures;
    for (const MilnorEntry& e : milnor_table(d, 4).entries) {
      c.expect(oracle_mu(d, e.I) == e.mu, to_pd(d) + " I=" + sequence_string(e.I));
    }
  }
  return c;
}

bool distinct(const std::vector<int>& I) {
  return std::set<int>(I.begin(), I.end()).size() == I.size();
}

Check criterion6() {
  Check c;
  std::mt19937_64 rng(77);
  std::vector<Fixture> cases = fixtures();
  for (int t = 0; t < 30; ++t) cases.push_back({"random", random_closure(rng, 3, 8)});

  for (const Fixture& f : cases) {
    const LinkDiagram& d = f.d;
    const int n = d.component_count();
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        c.expect(lk(d, i, j) == lk(d, j, i), f.name + " lk symmetry");
        c.expect(lk(d, i, j) == lk_symmetrized(d, i, j), f.name + " lk != lk_symmetrized");
      }
    }
  }

  for (const Fixture& f : fixtures()) {
    const MilnorTable t = milnor_table(f.d, 4);
    for (const std::string& v : check_relations(t)) c.expect(false, f.name + " " + v);
    c.expect(true, f.name + " relations");
    for (int i = 1; i <= f.d.component_count(); ++i) {
      const MilnorTable r = milnor_table(reverse_component(f.d, i), 4);
      for (std::size_t p = 0; p < t.entries.size(); ++p) {
        const MilnorEntry& a = t.entries[p];
        const auto occ = std::count(a.I.begin(), a.I.end(), i);
        c.expect(reduce(occ % 2 ? -a.mu : a.mu, a.delta) ==
                     reduce(r.entries[p].mu, r.entries[p].delta),
                 f.name + " reversal of " + std::to_string(i) + " at " +
                     sequence_string(a.I));
      }
    }
  }

  for (const Fixture& f : cases) {
    const LinkDiagram d = random_isotopy(f.d, 3, rng);
    const MilnorTable t = milnor_table(d, 3);
    for (CrossingId x = 0; x < d.crossing_count(); ++x) {
      if (!d.is_self_crossing(x)) continue;
      MoveSpec m;
      m.kind = MoveKind::SelfCrossingChange;
      m.crossing = x;
      const MilnorTable s = milnor_table(apply_move(d, m), 3);
      for (std::size_t p = 0; p < t.entries.size(); ++p) {
        if (!distinct(t.entries[p].I)) continue;
        c.expect(s.entries[p].mu_bar == t.entries[p].mu_bar &&
                     s.entries[p].delta == t.entries[p].delta,
                 f.name + " self-crossing change at " + sequence_string(t.entries[p].I));
      }
    }
    if (const auto site = find_delta_site(f.d)) {
      for (int sign : {1, -1}) {
        MoveSpec m = *site;
        m.sign = sign;
        c.expect(same_linking(linking_matrix(apply_move(f.d, m)), linking_matrix(f.d)),
                 f.name + " delta move changed lk");
      }
    }
  }

  const LinkDiagram hopf = parse_braid("1 1", 2);
  c.expect(lk(band_sum(hopf, hopf), 1, 2) == 2, "lk(Hopf # Hopf) != 2");
  const LinkDiagram b = load("borromean.pd");
  const int I[] = {1, 2, 3};
  c.expect(mu_bar(band_sum(b, b), I) == Residue{2, 0}, "mu_bar(123) of B # B != 2");
  return c;
}

Check criterion7() {
  Check c;
  for (const Fixture& f : fixtures()) {
    const MilnorTable t = milnor_table(f.d, 4);
    for (int r = 1; r <= 4; ++r) {
      std::vector<int> offsets;
      for (int i = 1; i <= f.d.component_count(); ++i) offsets.push_back(r + i - 1);
      c.expect(same_residues(milnor_table(f.d, 4, false, offsets), t),
               f.name + " rotation " + std::to_string(r));
    }
  }
  return c;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "Borromean rings: lk = 0, mu_bar(123) cyclic = 1, (132) cyclic = -1, E(lambda_3)", criterion1());
  ok &= report(2, "Hopf powers: lk = n and mu(12) = lk for n = 1, 2, 3", criterion2());
  ok &= report(3, "Whitehead link: first non-vanishing length 4, mu_bar(1122) = 1, cabled 1324 = 1", criterion3());
  ok &= report(4, "random Reidemeister sequences keep the k = 4 table", criterion4());
  ok &= report(5, "mu equals the fixed-point oracle", criterion5());
  ok &= report(6, "property suites", criterion6());
  ok &= report(7, "rotated base arcs give the same tables", criterion7());
  return ok ? 0 : 1;
}
