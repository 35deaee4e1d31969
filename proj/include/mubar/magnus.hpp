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

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mubar/free_word.hpp"

namespace mubar {

using Integer = boost::multiprecision::cpp_int;

/// Element of Z<<X_1..X_n>> with every monomial of degree > k dropped.
///
/// Monomials are packed six bits per variable, so n <= 63 and k <= 10.
class TruncatedSeries {
 public:
  static constexpr int kMaxVariables = 63;
  static constexpr int kMaxBound = 10;

  TruncatedSeries(int n, int k);  // the zero series
  static TruncatedSeries one(int n, int k);

  int variables() const noexcept { return n_; }
  int bound() const noexcept { return k_; }

  /// Coefficient of X_{I[0]} ... X_{I[m-1]}; the empty sequence is the
  /// constant term. Sequences longer than the bound are a usage error.
  Integer coefficient(std::span<const int> I) const;
  void add(std::span<const int> I, const Integer& c);

  /// Nonzero terms sorted by degree, then lexicographically.
  std::vector<std::pair<std::vector<int>, Integer>> terms() const;
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Same series with the bound lowered to k (k <= bound()).
  TruncatedSeries truncated(int k) const;

  /// In-place right multiplication by the expansion of m_g^{exponent}.
  void multiply_by_meridian(int g, int exponent);

  friend TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  using Key = std::uint64_t;
  static int degree(Key key) noexcept;
  Key encode(std::span<const int> I) const;

  int n_;
  int k_;
  std::unordered_map<Key, Integer> terms_;
};

/// Magnus expansion of a word whose generators are 1..n.
TruncatedSeries expand(const FreeWord& w, int n, int k);

}  // namespace mubar
