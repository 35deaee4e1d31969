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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mubar/diagram.hpp"
#include "mubar/free_word.hpp"
#include "mubar/magnus.hpp"
#include "mubar/wirtinger.hpp"

namespace mubar {

/// Rewrites arc generators as words in the meridians m_1..m_n (generator i
/// of the result is m_i). Results are memoized per (arc, depth).
class MilnorEngine {
 public:
  explicit MilnorEngine(const LinkDiagram& d, std::span<const int> base_offset = {});

  const LinkDiagram& diagram() const noexcept { return d_; }
  const WirtingerPresentation& wirtinger() const noexcept { return p_; }

  /// Depth 1 is the component's meridian; depth q+1 is C m C^-1 with C the
  /// accumulated conjugator, its arc letters rewritten at depth q.
  const FreeWord& meridian_rewrite(int arc, int depth);

  /// Preferred longitude of j with every arc letter rewritten at `depth`.
  FreeWord longitude_word(int j, int depth);

  /// Expansion of longitude_word(j, depth) truncated at degree `bound`.
  TruncatedSeries longitude_series(int j, int depth, int bound);

  /// mu(I): rewriting depth |I|, last index is the longitude.
  Integer mu(std::span<const int> I);

 private:
  void build_level(int depth);

  LinkDiagram d_;
  WirtingerPresentation p_;
  std::vector<std::vector<FreeWord>> levels_;  // levels_[q-1][arc]
};

struct Residue {
  Integer value;
  Integer modulus;  // 0 means an exact integer
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Canonical representative in [0, modulus), or value itself if modulus = 0.
Residue reduce(const Integer& value, const Integer& modulus);

struct MilnorEntry {
  std::vector<int> I;
  Integer mu;
  Integer delta;
  Integer mu_bar;
  bool exact = false;
  friend bool operator==(const MilnorEntry&, const MilnorEntry&) = default;
};

struct MilnorTable {
  int n = 0;
  int k = 0;
  std::vector<MilnorEntry> entries;  // sorted lexicographically by I

  const MilnorEntry* find(std::span<const int> I) const;
  const MilnorEntry& at(std::span<const int> I) const;
  friend bool operator==(const MilnorTable&, const MilnorTable&) = default;
};

/// Compares (I, delta, mu_bar) only. Raw mu values depend on the diagram
/// wherever delta != 0, so they are not compared.
bool same_residues(const MilnorTable& a, const MilnorTable& b);

/// milnor_table refuses more than this many sequences unless forced.
inline constexpr long long kSequenceBudget = 1'000'000;

Integer mu(const LinkDiagram& d, std::span<const int> I);
Integer delta(const LinkDiagram& d, std::span<const int> I);
Residue mu_bar(const LinkDiagram& d, std::span<const int> I);

/// All sequences over 1..n of length 2..k.
MilnorTable milnor_table(const LinkDiagram& d, int k, bool force = false,
                         std::span<const int> base_offset = {});

/// Smallest length with a nonzero mu, or nullopt if every entry vanishes.
std::optional<int> first_nonvanishing(const MilnorTable& t);
std::optional<int> first_nonvanishing(const LinkDiagram& d, int k_max);

struct CablingStep {
  std::vector<int> I;  // the rewritten sequence
  int component = 0;   // component to double
};

/// Replaces the second occurrence of the first repeated index by n + 1.
CablingStep cabling_reduce(std::span<const int> I, int n);

/// Cyclic-symmetry and shuffle congruences; returns the violations found.
std::vector<std::string> check_relations(const MilnorTable& t);

/// Independent check of mu(I): iterates the Wirtinger relations on series
/// assigned to every arc until they stop changing.
Integer oracle_mu(const LinkDiagram& d, std::span<const int> I);

std::string sequence_string(std::span<const int> I);

}  // namespace mubar
