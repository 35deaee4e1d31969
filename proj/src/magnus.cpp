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

#include "mubar/magnus.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mubar/error.hpp"

namespace mubar {

namespace {

constexpr int kBits = 6;

std::uint64_t shift(int degree) { return std::uint64_t{1} << (kBits * degree); }

std::vector<int> decode(std::uint64_t key) {
  std::vector<int> out;
  for (; key != 0; key >>= kBits) out.push_back(static_cast<int>(key & 63));
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > kMaxVariables || k < 0 || k > kMaxBound) {
    throw ValidationError("series needs 0 <= n <= 63 and 0 <= k <= 10, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
  }
}

TruncatedSeries TruncatedSeries::one(int n, int k) {
  TruncatedSeries s(n, k);
  s.terms_.emplace(0, 1);
  return s;
}

int TruncatedSeries::degree(Key key) noexcept {
  return key == 0 ? 0 : (std::bit_width(key) + kBits - 1) / kBits;
}

TruncatedSeries::Key TruncatedSeries::encode(std::span<const int> I) const {
  if (static_cast<int>(I.size()) > k_) {
    throw ValidationError("sequence of length " + std::to_string(I.size()) +
                          " exceeds truncation bound " + std::to_string(k_));
  }
  Key key = 0;
  for (std::size_t p = 0; p < I.size(); ++p) {
    if (I[p] < 1 || I[p] > n_) {
      throw ValidationError("variable index " + std::to_string(I[p]) +
                            " out of range 1.." + std::to_string(n_));
    }
    key += static_cast<Key>(I[p]) * shift(static_cast<int>(p));
  }
  return key;
}

Integer TruncatedSeries::coefficient(std::span<const int> I) const {
  const auto it = terms_.find(encode(I));
  return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedSeries::add(std::span<const int> I, const Integer& c) {
  const Key key = encode(I);
  Integer& slot = terms_[key];
  slot += c;
  if (slot == 0) terms_.erase(key);
}

std::vector<std::pair<std::vector<int>, Integer>> TruncatedSeries::terms() const {
  std::vector<std::pair<std::vector<int>, Integer>> out;
  for (const auto& [key, c] : terms_) out.emplace_back(decode(key), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int k) const {
  if (k > k_) throw ValidationError("cannot raise a truncation bound");
  TruncatedSeries s(n_, k);
  for (const auto& [key, c] : terms_) {
    if (degree(key) <= k) s.terms_.emplace(key, c);
  }
  return s;
}

void TruncatedSeries::multiply_by_meridian(int g, int exponent) {
  if (g < 1 || g > n_) {
    throw ValidationError("letter " + std::to_string(g) + " out of range 1.." +
                          std::to_string(n_));
  }
  // m = 1 + X;  m^-1 = 1 - X + X^2 - ...
  std::unordered_map<Key, Integer> next = terms_;
  for (const auto& [key, c] : terms_) {
    Key k = key;
    Integer term = c;
    for (int d = degree(key); d < k_; ++d) {
      k += static_cast<Key>(g) * shift(d);
      if (exponent < 0) term = -term;
      Integer& slot = next[k];
      slot += term;
      if (slot == 0) next.erase(k);
      if (exponent > 0) break;
    }
  }
  terms_ = std::move(next);
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.n_ != b.n_ || a.k_ != b.k_) {
    throw ValidationError("series have different variable counts or bounds");
  }
  TruncatedSeries out(a.n_, a.k_);
  for (const auto& [ka, ca] : a.terms_) {
    const int da = TruncatedSeries::degree(ka);
    for (const auto& [kb, cb] : b.terms_) {
      if (da + TruncatedSeries::degree(kb) > a.k_) continue;
      const auto key = ka + kb * shift(da);
      Integer& slot = out.terms_[key];
      slot += ca * cb;
      if (slot == 0) out.terms_.erase(key);
    }
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.n_ == b.n_ && a.k_ == b.k_ && a.terms_ == b.terms_;
}

TruncatedSeries expand(const FreeWord& w, int n, int k) {
  TruncatedSeries s = TruncatedSeries::one(n, k);
  for (const Letter& l : w.letters()) s.multiply_by_meridian(l.generator, l.exponent);
  return s;
}

}  // namespace mubar
