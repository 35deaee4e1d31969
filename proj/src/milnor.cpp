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

#include "mubar/milnor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mubar/error.hpp"
#include "mubar/linking.hpp"

namespace mubar {

namespace {

void check_sequence(const LinkDiagram& d, std::span<const int> I) {
  if (I.size() < 2) throw ValidationError("sequence needs length >= 2");
  for (int i : I) {
    if (i < 1 || i > d.component_count()) {
      throw ValidationError("index " + std::to_string(i) + " in " +
                            sequence_string(I) + " out of range 1.." +
                            std::to_string(d.component_count()));
    }
  }
}

Integer gcd_abs(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

// Every I' of length >= 2 reached by deleting at least one index from I and
// then rotating cyclically.
std::set<std::vector<int>> reduced_sequences(std::span<const int> I) {
  std::set<std::vector<int>> out;
  const int m = static_cast<int>(I.size());
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<int> sub;
    for (int p = 0; p < m; ++p) {
      if (mask & (1u << p)) sub.push_back(I[p]);
    }
    if (sub.size() < 2) continue;
    for (std::size_t r = 0; r < sub.size(); ++r) {
      out.insert(sub);
      std::rotate(sub.begin(), sub.begin() + 1, sub.end());
    }
  }
  return out;
}

// Calls f on every sequence over 1..n of length m, in lexicographic order.
template <class F>
void for_each_sequence(int n, int m, F&& f) {
  std::vector<int> I(m, 1);
  while (true) {
    f(std::span<const int>(I));
    int p = m - 1;
    while (p >= 0 && I[p] == n) I[p--] = 1;
    if (p < 0) return;
    ++I[p];
  }
}

}  // namespace

std::string sequence_string(std::span<const int> I) {
  std::string s;
  const bool wide = std::any_of(I.begin(), I.end(), [](int i) { return i > 9; });
  for (int i : I) {
    if (wide && !s.empty()) s += ',';
    s += std::to_string(i);
  }
  return s;
}

MilnorEngine::MilnorEngine(const LinkDiagram& d, std::span<const int> base_offset)
    : d_(d), p_(presentation(d, base_offset)) {}

void MilnorEngine::build_level(int depth) {
  std::vector<FreeWord> level(p_.arcs.size());
  for (std::size_t a = 0; a < p_.arcs.size(); ++a) {
    level[a] = FreeWord::generator(p_.arcs[a].component);
  }
  if (depth > 1) {
    const auto& prev = levels_[depth - 2];
    for (int i = 1; i <= p_.component_count(); ++i) {
      const FreeWord m = FreeWord::generator(i);
      FreeWord conj;
      for (const UnderStep& s : p_.walks[i - 1]) {
        level[s.arc] = conj * m * conj.inverse();
        conj = prev[s.over].power(-s.sign) * conj;
      }
    }
  }
  levels_.push_back(std::move(level));
}

const FreeWord& MilnorEngine::meridian_rewrite(int arc, int depth) {
  if (arc < 0 || arc >= static_cast<int>(p_.arcs.size())) {
    throw ValidationError("unknown arc " + std::to_string(arc));
  }
  if (depth < 1) throw ValidationError("rewriting depth must be >= 1");
  while (static_cast<int>(levels_.size()) < depth) {
    build_level(static_cast<int>(levels_.size()) + 1);
  }
  return levels_[depth - 1][arc];
}

FreeWord MilnorEngine::longitude_word(int j, int depth) {
  const FreeWord raw = preferred_longitude(d_, p_, j);
  FreeWord w;
  for (const Letter& l : raw.letters()) {
    w *= meridian_rewrite(l.generator, depth).power(l.exponent);
  }
  return w;
}

TruncatedSeries MilnorEngine::longitude_series(int j, int depth, int bound) {
  return expand(longitude_word(j, depth), d_.component_count(), bound);
}

Integer MilnorEngine::mu(std::span<const int> I) {
  check_sequence(d_, I);
  const int m = static_cast<int>(I.size());
  return longitude_series(I.back(), m, m - 1).coefficient(I.first(m - 1));
}

Residue reduce(const Integer& value, const Integer& modulus) {
  if (modulus == 0) return {value, 0};
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return {r, modulus};
}

const MilnorEntry* MilnorTable::find(std::span<const int> I) const {
  const std::vector<int> key(I.begin(), I.end());
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), key,
      [](const MilnorEntry& e, const std::vector<int>& k) { return e.I < k; });
  return it != entries.end() && it->I == key ? &*it : nullptr;
}

const MilnorEntry& MilnorTable::at(std::span<const int> I) const {
  const MilnorEntry* e = find(I);
  if (!e) throw ValidationError("sequence " + sequence_string(I) + " not in table");
  return *e;
}

bool same_residues(const MilnorTable& a, const MilnorTable& b) {
  if (a.n != b.n || a.k != b.k || a.entries.size() != b.entries.size()) return false;
  for (std::size_t p = 0; p < a.entries.size(); ++p) {
    const MilnorEntry& x = a.entries[p];
    const MilnorEntry& y = b.entries[p];
    if (x.I != y.I || x.delta != y.delta || x.mu_bar != y.mu_bar) return false;
  }
  return true;
}

Integer mu(const LinkDiagram& d, std::span<const int> I) {
  return MilnorEngine(d).mu(I);
}

Integer delta(const LinkDiagram& d, std::span<const int> I) {
  check_sequence(d, I);
  MilnorEngine engine(d);
  Integer g = 0;
  for (const auto& sub : reduced_sequences(I)) g = gcd_abs(g, engine.mu(sub));
  return g;
}

Residue mu_bar(const LinkDiagram& d, std::span<const int> I) {
  return reduce(mu(d, I), delta(d, I));
}

MilnorTable milnor_table(const LinkDiagram& d, int k, bool force,
                         std::span<const int> base_offset) {
  if (k < 2) throw ValidationError("k must be >= 2");
  const int n = d.component_count();
  long long count = 0;
  long long power = n;
  for (int m = 2; m <= k; ++m) {
    power = std::min<long long>(power * n, kSequenceBudget + 1);
    count = std::min<long long>(count + power, kSequenceBudget + 1);
  }
  if (count > kSequenceBudget && !force) {
    throw ResourceError("table with n=" + std::to_string(n) + ", k=" +
                        std::to_string(k) + " exceeds " +
                        std::to_string(kSequenceBudget) +
                        " sequences; override to proceed");
  }
  if (k - 1 > TruncatedSeries::kMaxBound) {
    throw ResourceError("k above " + std::to_string(TruncatedSeries::kMaxBound + 1) +
                        " is not supported");
  }

  MilnorTable t{n, k, {}};
  std::map<std::vector<int>, Integer> mus;
  MilnorEngine engine(d, base_offset);
  for (int m = 2; m <= k && n > 0; ++m) {
    std::vector<TruncatedSeries> series;
    for (int j = 1; j <= n; ++j) series.push_back(engine.longitude_series(j, m, m - 1));
    for_each_sequence(n, m, [&](std::span<const int> I) {
      mus.emplace(std::vector<int>(I.begin(), I.end()),
                  series[I.back() - 1].coefficient(I.first(m - 1)));
    });
  }
  for (const auto& [I, value] : mus) {
    Integer g = 0;
    for (const auto& sub : reduced_sequences(I)) g = gcd_abs(g, mus.at(sub));
    const Residue r = reduce(value, g);
    t.entries.push_back({I, value, g, r.value, g == 0});
  }
  return t;
}

std::optional<int> first_nonvanishing(const MilnorTable& t) {
  std::optional<int> best;
  for (const MilnorEntry& e : t.entries) {
    const int m = static_cast<int>(e.I.size());
    if (e.mu != 0 && (!best || m < *best)) best = m;
  }
  if (best) {
    for (const MilnorEntry& e : t.entries) {
      if (static_cast<int>(e.I.size()) == *best && e.delta != 0) {
        throw std::logic_error("nonzero delta at the first non-vanishing length");
      }
    }
  }
  return best;
}

std::optional<int> first_nonvanishing(const LinkDiagram& d, int k_max) {
  return first_nonvanishing(milnor_table(d, k_max));
}

CablingStep cabling_reduce(std::span<const int> I, int n) {
  std::vector<int> out(I.begin(), I.end());
  for (std::size_t p = 1; p < out.size(); ++p) {
    if (std::find(out.begin(), out.begin() + p, out[p]) != out.begin() + p) {
      const int i = out[p];
      out[p] = n + 1;
      return {out, i};
    }
  }
  throw ValidationError("sequence " + sequence_string(I) + " has no repeated index");
}

}  // namespace mubar
