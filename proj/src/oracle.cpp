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

#include <string>

#include "mubar/error.hpp"
#include "mubar/linking.hpp"
#include "mubar/milnor.hpp"

namespace mubar {

namespace {

// (1 + A)^-1 = 1 - A + A^2 - ... for a series with constant term 1.
TruncatedSeries group_inverse(const TruncatedSeries& s) {
  const int n = s.variables();
  const int k = s.bound();
  TruncatedSeries minus_a(n, k);
  for (const auto& [I, c] : s.terms()) {
    if (!I.empty()) minus_a.add(I, -c);
  }
  TruncatedSeries out = TruncatedSeries::one(n, k);
  TruncatedSeries power = TruncatedSeries::one(n, k);
  for (int r = 1; r <= k; ++r) {
    power = mul(power, minus_a);
    for (const auto& [I, c] : power.terms()) out.add(I, c);
  }
  return out;
}

TruncatedSeries group_power(const TruncatedSeries& s, int e) {
  const TruncatedSeries base = e < 0 ? group_inverse(s) : s;
  TruncatedSeries out = TruncatedSeries::one(s.variables(), s.bound());
  for (int r = 0; r < (e < 0 ? -e : e); ++r) out = mul(out, base);
  return out;
}

}  // namespace

Integer oracle_mu(const LinkDiagram& d, std::span<const int> I) {
  const int n = d.component_count();
  const int m = static_cast<int>(I.size());
  if (m < 2) throw ValidationError("sequence needs length >= 2");
  for (int i : I) {
    if (i < 1 || i > n) throw ValidationError("index out of range");
  }
  const int k = m - 1;
  const WirtingerPresentation p = presentation(d);
  const int arcs = static_cast<int>(p.arcs.size());

  std::vector<bool> is_base(arcs, false);
  for (int b : p.base_arc) is_base[b] = true;
  std::vector<TruncatedSeries> value;
  for (const Arc& a : p.arcs) {
    TruncatedSeries s = TruncatedSeries::one(n, k);
    s.multiply_by_meridian(a.component, 1);
    value.push_back(std::move(s));
  }

  // Each sweep fixes at least one more arc per degree, so this many sweeps
  // always suffice; running out means the relations are inconsistent.
  const int budget = (arcs + 1) * (k + 1) + 1;
  bool stable = false;
  for (int sweep = 0; sweep < budget && !stable; ++sweep) {
    std::vector<TruncatedSeries> next = value;
    for (const WirtingerRelation& r : p.relations) {
      if (is_base[r.out]) continue;
      next[r.out] = mul(mul(group_power(value[r.over], -r.sign), value[r.in]),
                        group_power(value[r.over], r.sign));
    }
    stable = next == value;
    value = std::move(next);
  }
  if (!stable) throw Error("oracle iteration budget exceeded");

  const int j = I.back();
  TruncatedSeries lambda = TruncatedSeries::one(n, k);
  const FreeWord longitude = preferred_longitude(d, p, j);
  for (const Letter& l : longitude.letters()) {
    lambda = mul(lambda, group_power(value[l.generator], l.exponent));
  }
  return lambda.coefficient(I.first(k));
}

}  // namespace mubar
