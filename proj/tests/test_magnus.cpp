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

#include <doctest.h>

#include <random>

#include "mubar/error.hpp"
#include "mubar/magnus.hpp"

using namespace mubar;

namespace {

TruncatedSeries series(int n, int k,
                       std::initializer_list<std::pair<std::vector<int>, int>> terms) {
  TruncatedSeries s(n, k);
  for (const auto& [I, c] : terms) s.add(I, c);
  return s;
}

FreeWord random_word(std::mt19937_64& rng, int n, int max_len) {
  FreeWord w;
  for (int k = static_cast<int>(rng() % (max_len + 1)); k > 0; --k) {
    w.push_back({1 + static_cast<int>(rng() % n), rng() % 2 ? 1 : -1});
  }
  return w;
}

}  // namespace

TEST_CASE("mul examples") {
  const auto a = series(1, 2, {{{}, 1}, {{1}, 1}});
  const auto b = series(1, 2, {{{}, 1}, {{1}, -1}, {{1, 1}, 1}});
  CHECK(mul(a, b) == TruncatedSeries::one(1, 2));

  const auto s = series(2, 3, {{{}, 1}, {{2, 1}, 5}, {{1, 1, 2}, -3}});
  CHECK(mul(TruncatedSeries::one(2, 3), s) == s);
  CHECK(mul(s, TruncatedSeries::one(2, 3)) == s);

  const auto x1 = series(2, 2, {{{}, 1}, {{1}, 1}});
  const auto x2 = series(2, 2, {{{}, 1}, {{2}, 1}});
  const auto p = mul(x1, x2);
  CHECK(p.term_count() == 4);
  CHECK(p == series(2, 2, {{{}, 1}, {{1}, 1}, {{2}, 1}, {{1, 2}, 1}}));
  CHECK_THROWS_AS(mul(x1, TruncatedSeries::one(2, 3)), ValidationError);
  CHECK_THROWS_AS(mul(x1, TruncatedSeries::one(3, 2)), ValidationError);
}

TEST_CASE("expand examples") {
  CHECK(expand(FreeWord::generator(1), 1, 3) == series(1, 3, {{{}, 1}, {{1}, 1}}));
  CHECK(expand(FreeWord::generator(1) * FreeWord::generator(1, -1), 1, 3) ==
        TruncatedSeries::one(1, 3));
  const FreeWord l3 = FreeWord::generator(2, -1) * FreeWord::generator(1) *
                      FreeWord::generator(2) * FreeWord::generator(1, -1);
  CHECK(expand(l3, 2, 2) ==
        series(2, 2, {{{}, 1}, {{1, 2}, 1}, {{2, 1}, -1}}));
  const auto e = expand(l3, 2, 3);
  const int i12[] = {1, 2};
  const int i21[] = {2, 1};
  CHECK(e.coefficient(i12) == 1);
  CHECK(e.coefficient(i21) == -1);
  CHECK_THROWS_AS(expand(FreeWord::generator(3), 2, 2), ValidationError);
}

TEST_CASE("coefficient") {
  const auto one = TruncatedSeries::one(3, 4);
  const int I[] = {1, 3, 2};
  const int empty[] = {0};
  CHECK(one.coefficient(I) == 0);
  CHECK(one.coefficient(std::span<const int>(empty, 0)) == 1);
  const int too_long[] = {1, 1, 1, 1, 1};
  CHECK_THROWS_AS(one.coefficient(too_long), ValidationError);
  const int bad[] = {4};
  CHECK_THROWS_AS(one.coefficient(bad), ValidationError);
}

TEST_CASE("zero coefficients are evicted") {
  TruncatedSeries s(2, 2);
  const int I[] = {1, 2};
  s.add(I, 3);
  s.add(I, -3);
  CHECK(s.term_count() == 0);
}

TEST_CASE("property: multiplicativity, inverses, truncation, commutators") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % 4);
    const FreeWord u = random_word(rng, n, 8);
    const FreeWord v = random_word(rng, n, 8);
    CHECK(expand(u * v, n, k) == mul(expand(u, n, k), expand(v, n, k)));
    CHECK(mul(expand(u, n, k), expand(u.inverse(), n, k)) ==
          TruncatedSeries::one(n, k));
    CHECK(expand(u, n, k).truncated(k - 1) == expand(u, n, k - 1));
    CHECK(expand(u, n, k).coefficient(std::span<const int>()) == 1);
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const FreeWord mi = FreeWord::generator(i);
      const FreeWord mj = FreeWord::generator(j);
      const auto c = expand(mi * mj * mi.inverse() * mj.inverse(), 3, 2);
      TruncatedSeries want = TruncatedSeries::one(3, 2);
      const int ij[] = {i, j};
      const int ji[] = {j, i};
      want.add(ij, 1);
      want.add(ji, -1);
      CHECK(c == want);
    }
  }
}
