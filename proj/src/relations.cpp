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

#include <algorithm>
#include <functional>
#include <string>

#include "mubar/milnor.hpp"

namespace mubar {

namespace {

Integer gcd_abs(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

bool congruent(const Integer& a, const Integer& b, const Integer& m) {
  return m == 0 ? a == b : (a - b) % m == 0;
}

// All interleavings of I and J, with multiplicity.
void shuffles(const std::vector<int>& I, const std::vector<int>& J,
              std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t a,
                                                          std::size_t b) {
    if (a == I.size() && b == J.size()) {
      out.push_back(cur);
      return;
    }
    if (a < I.size()) {
      cur.push_back(I[a]);
      rec(a + 1, b);
      cur.pop_back();
    }
    if (b < J.size()) {
      cur.push_back(J[b]);
      rec(a, b + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<std::string> check_relations(const MilnorTable& t) {
  std::vector<std::string> violations;
  for (const MilnorEntry& e : t.entries) {
    std::vector<int> rot(e.I);
    std::rotate(rot.rbegin(), rot.rbegin() + 1, rot.rend());
    const MilnorEntry& r = t.at(rot);
    const Integer m = gcd_abs(e.delta, r.delta);
    if (e.delta != r.delta || !congruent(e.mu, r.mu, m)) {
      violations.push_back("cyclic: " + sequence_string(e.I) + " vs " +
                           sequence_string(rot));
    }
  }

  // Sequences of total length m = |I| + |J| + 1 <= k, taken from the table
  // itself so the enumeration order is deterministic.
  for (const MilnorEntry& e : t.entries) {
    const int m = static_cast<int>(e.I.size());
    if (m < 3) continue;
    const int last = e.I.back();
    // Each split of the prefix into a front part I (length a) and a back
    // part J; splits are enumerated once per ordered choice (I, J) by
    // taking the prefix as I followed by J.
    for (int a = 1; a + 1 < m; ++a) {
      const std::vector<int> I(e.I.begin(), e.I.begin() + a);
      const std::vector<int> J(e.I.begin() + a, e.I.end() - 1);
      std::vector<std::vector<int>> hs;
      shuffles(I, J, hs);
      Integer sum = 0;
      Integer g = 0;
      for (auto& h : hs) {
        h.push_back(last);
        const MilnorEntry& he = t.at(h);
        sum += he.mu;
        g = gcd_abs(g, he.delta);
      }
      if (!congruent(sum, 0, g)) {
        violations.push_back("shuffle: I=" + sequence_string(I) +
                             " J=" + sequence_string(J) + " k=" +
                             std::to_string(last));
      }
    }
  }
  return violations;
}

}  // namespace mubar
